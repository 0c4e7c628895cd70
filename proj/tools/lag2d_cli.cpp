// Command-line front end: evaluation of the two-index polynomial family at
// complex or quaternionic points, table emitters, and the identity-check
// suites.  All numerical work lives in the library; this file only parses
// arguments, dispatches, and serializes reports.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lag2d/analysis.hpp"
#include "lag2d/bipoly.hpp"
#include "lag2d/cli_util.hpp"
#include "lag2d/construct2d.hpp"
#include "lag2d/error.hpp"
#include "lag2d/ladder.hpp"
#include "lag2d/quadrature.hpp"
#include "lag2d/quaternion.hpp"
#include "lag2d/report.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;
constexpr int kExitIo = 74;

struct run_config {
  int mmax = 8;
  std::string beta_list = "0,0.5,1";
  double beta_single = 0.0;
  lag2d::resolution res;
  int samples = 20;
  unsigned long long seed = 12345;
  double tol = -1.0;  // < 0: keep each suite's documented default
  std::string format = "json";
  std::string out;

  // table / quantize parameters
  int m = 0, n = 0, big_m = 8, points = 33;
  double xmax = 4.0;
  std::string f = "z";
  bool cross_stratum = false;
};

lag2d::moment_tag parse_moment_tag(const std::string& s) {
  if (s == "one") return lag2d::moment_tag::one;
  if (s == "z") return lag2d::moment_tag::z;
  if (s == "zbar") return lag2d::moment_tag::zbar;
  if (s == "zsq_abs") return lag2d::moment_tag::zsq_abs;
  if (s == "theta") return lag2d::moment_tag::theta;
  throw std::invalid_argument("unknown moment weight '" + s +
                              "' (one, z, zbar, zsq_abs, theta)");
}

// Writes `text` to cfg.out or stdout.  Returns false on IO failure.
bool emit_text(const run_config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream os(cfg.out);
  if (!os) return false;
  os << text;
  return static_cast<bool>(os);
}

int emit_batch(const run_config& cfg, const std::string& suite,
               const nlohmann::json& config, const lag2d::report_batch& b) {
  std::string text;
  if (cfg.format == "csv") {
    std::ostringstream os;
    b.write_csv(os);
    text = os.str();
  } else {
    text = b.to_json(suite, config).dump(2) + "\n";
  }
  if (!emit_text(cfg, text)) {
    std::cerr << "error: cannot write output to '" << cfg.out << "'\n";
    return kExitIo;
  }
  return b.exit_code();
}

nlohmann::json config_json(const run_config& cfg,
                           const std::vector<double>& betas) {
  return {{"mmax", cfg.mmax},
          {"betas", betas},
          {"nr", cfg.res.nr},
          {"ntheta", cfg.res.ntheta},
          {"nphi", cfg.res.nphi},
          {"npsi", cfg.res.npsi},
          {"samples", cfg.samples},
          {"seed", cfg.seed},
          {"format", cfg.format}};
}

int run_eval(const run_config& cfg, const std::string& zarg,
             const std::string& qarg, bool dual) {
  using namespace lag2d;
  nlohmann::json j{{"command", "eval"},
                   {"m", cfg.m},
                   {"n", cfg.n},
                   {"beta", cfg.beta_single}};
  std::ostringstream os;
  if (!zarg.empty()) {
    const cplx z = parse_complex(zarg);
    const cplx direct = eval_complex(z_poly(cfg.m, cfg.n, cfg.beta_single), z);
    j["point"] = format_complex(z);
    j["value"] = format_complex(direct);
    os << format_complex(direct) << "\n";
    if (dual) {
      const cplx hyp = z_eval_1f1(cfg.m, cfg.n, cfg.beta_single, z);
      j["paths"] = {{"coefficient", format_complex(direct)},
                    {"hypergeometric", format_complex(hyp)},
                    {"difference", std::abs(direct - hyp)}};
      os << "hypergeometric: " << format_complex(hyp) << "\n"
         << "difference: " << std::abs(direct - hyp) << "\n";
    }
  } else {
    const quaternion q = parse_quaternion(qarg);
    const quaternion direct =
        eval_quaternion(z_poly(cfg.m, cfg.n, cfg.beta_single), q);
    j["point"] = format_quaternion(q);
    j["value"] = format_quaternion(direct);
    os << format_quaternion(direct) << "\n";
    if (dual) {
      const quaternion sw = sandwich_eval({cfg.m, cfg.n}, cfg.beta_single, q);
      j["paths"] = {{"monomial", format_quaternion(direct)},
                    {"sandwich", format_quaternion(sw)},
                    {"difference", (direct - sw).max_abs()}};
      os << "sandwich: " << format_quaternion(sw) << "\n"
         << "difference: " << (direct - sw).max_abs() << "\n";
    }
  }
  const std::string text =
      cfg.format == "json" ? j.dump(2) + "\n" : os.str();
  if (!emit_text(cfg, text)) {
    std::cerr << "error: cannot write output to '" << cfg.out << "'\n";
    return kExitIo;
  }
  return 0;
}

int run_check(const run_config& cfg, const std::string& suite) {
  using namespace lag2d;
  const std::vector<double> betas = parse_double_list(cfg.beta_list);
  for (double b : betas)
    if (!(b > -1.0))
      throw std::invalid_argument("beta must exceed -1");
  report_batch all;
  const auto tol_or = [&](double dflt) {
    return cfg.tol > 0.0 ? cfg.tol : dflt;
  };

  if (suite == "ladder") {
    for (double b : betas) {
      all.append(check_ladder_complex(cfg.mmax, b));
      all.append(check_ladder_quaternionic(std::min(cfg.mmax, 6), b,
                                           cfg.samples,
                                           static_cast<unsigned>(cfg.seed)));
    }
  } else if (suite == "commutators") {
    for (double b : betas) all.append(check_commutators(cfg.mmax, b));
  } else if (suite == "recurrences") {
    for (double b : betas) {
      for (int m = 0; m <= cfg.mmax; ++m)
        for (int n = 0; n <= m; ++n) all.append(z_recurrences_check({m, n}, b));
      all.append(check_diff_recurrences(cfg.mmax, b));
    }
  } else if (suite == "ortho") {
    for (double b : betas)
      all.append(orthogonality_check(cfg.mmax, b, cfg.res, tol_or(1e-9)));
    for (double c : {1.0, 1.5, 3.0})
      all.append(confluent_orthogonality_check(c, cfg.mmax, cfg.res.nr,
                                               tol_or(1e-10)));
  } else if (suite == "sums") {
    all.append(check_sums({0, 1, 2}, betas, cfg.samples,
                          static_cast<unsigned>(cfg.seed), tol_or(1e-8)));
    for (double b : betas)
      for (int n : {0, 1, 2})
        all.append(check_shifted_sum(n, b, cplx(1.0, 0.0)));
  } else if (suite == "moments") {
    std::vector<moment_tag> tags;
    if (cfg.f == "all")
      tags = {moment_tag::zsq_abs, moment_tag::z, moment_tag::zbar,
              moment_tag::theta};
    else
      tags = {parse_moment_tag(cfg.f)};
    for (double b : betas) {
      for (moment_tag t : tags)
        all.append(check_moments(t, std::min(cfg.mmax, 5), b, cfg.res));
      if (cfg.cross_stratum)
        all.append(
            check_theta_cross_stratum(std::min(cfg.mmax, 5), b, cfg.res));
    }
  } else if (suite == "quat") {
    all.append(dual_path_check(cfg.mmax, betas, cfg.samples, cfg.seed,
                               tol_or(1e-12)));
    for (double b : betas) {
      all.append(quaternionic_orthogonality_check(std::min(cfg.mmax, 4), b,
                                                  cfg.res, tol_or(1e-8)));
      all.append(check_quaternion_moments(std::min(cfg.mmax, 2), b, cfg.res,
                                          tol_or(1e-6)));
      for (int n : {0, 1})
        all.append(check_quaternion_sum(n, b, cfg.samples,
                                        static_cast<unsigned>(cfg.seed),
                                        tol_or(1e-8)));
    }
  } else if (suite == "quantize") {
    for (double b : betas)
      all.append(check_quantize(cfg.n, b, cfg.big_m, cfg.res));
  } else {
    std::cerr << "error: unknown check suite '" << suite << "'\n";
    return kExitUsage;
  }
  return emit_batch(cfg, suite, config_json(cfg, betas), all);
}

int run_table(const run_config& cfg, const std::string& what) {
  using namespace lag2d;
  std::ostringstream os;
  nlohmann::json j{{"table", what}, {"beta", cfg.beta_single}};

  if (what == "coeffs") {
    write_coeff_csv(os, cfg.m, cfg.n, cfg.beta_single);
    if (cfg.format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      const poly p = z_poly(cfg.m, cfg.n, cfg.beta_single);
      for (const auto& [k, c] : p.terms())
        rows.push_back({k.first, k.second, c});
      j["m"] = cfg.m;
      j["n"] = cfg.n;
      j["rows"] = rows;
    }
  } else if (what == "norms") {
    os << "m,n,beta,c\n";
    nlohmann::json rows = nlohmann::json::array();
    for (int m = 0; m <= cfg.mmax; ++m)
      for (int n = 0; n <= cfg.mmax; ++n) {
        const double c = norm_constant(m, n, cfg.beta_single);
        os << m << ',' << n << ',' << cfg.beta_single << ',' << c << '\n';
        rows.push_back({m, n, c});
      }
    j["mmax"] = cfg.mmax;
    j["rows"] = rows;
  } else if (what == "kernel") {
    if (cfg.points < 2 || !(cfg.xmax > 0.0))
      throw std::invalid_argument("kernel table needs points >= 2, xmax > 0");
    os << "x,kernel\n";
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < cfg.points; ++i) {
      const double x = cfg.xmax * i / (cfg.points - 1);
      const cplx z(std::sqrt(x), 0.0);
      const kernel_truncation tr =
          auto_truncation(cfg.n, cfg.beta_single, z);
      const double k = kernel(tr, z);
      os << x << ',' << k << '\n';
      rows.push_back({x, k});
    }
    j["n"] = cfg.n;
    j["rows"] = rows;
  } else if (what == "quantize-matrix") {
    const cmatrix a = quantize(parse_moment_tag(cfg.f), cfg.n,
                               cfg.beta_single, cfg.big_m, cfg.res);
    write_matrix_csv(os, a);
    j["f"] = cfg.f;
    j["n"] = cfg.n;
    j["M"] = cfg.big_m;
    j["matrix"] = matrix_to_json(a);
  } else {
    std::cerr << "error: unknown table '" << what << "'\n";
    return kExitUsage;
  }

  const std::string text =
      cfg.format == "json" ? j.dump(2) + "\n" : os.str();
  if (!emit_text(cfg, text)) {
    std::cerr << "error: cannot write output to '" << cfg.out << "'\n";
    return kExitIo;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  run_config cfg;
  CLI::App app{
      "Two-index generalized Laguerre polynomial family: evaluation, "
      "tables, and identity-check suites"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--format", cfg.format, "Report format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write output to this path (default stdout)");
  app.add_option("--tol", cfg.tol,
                 "Override the headline tolerance of suites that expose one "
                 "(ortho, sums, quat); suites with fixed per-identity "
                 "tolerances ignore it");
  app.add_option("--seed", cfg.seed, "Seed for randomized property samples")
      ->capture_default_str();

  std::string zarg, qarg, suite, what;
  bool dual = false;

  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate Z_{m,n} at a complex or quaternionic point");
  eval->add_option("--m", cfg.m, "First index")->required();
  eval->add_option("--n", cfg.n, "Second index")->required();
  eval->add_option("--beta", cfg.beta_single, "Weight parameter (> -1)")
      ->capture_default_str();
  auto* zopt = eval->add_option("--z", zarg, "Complex point, e.g. 0.7+0.3i");
  auto* qopt =
      eval->add_option("--q", qarg, "Quaternion point, e.g. 1,1,0,0");
  zopt->excludes(qopt);
  eval->add_flag("--dual-path", dual,
                 "Also evaluate through the independent second path and "
                 "print the difference");

  CLI::App* check = app.add_subcommand(
      "check",
      "Run an identity-check suite (ladder, commutators, recurrences, ortho, "
      "sums, moments, quat, quantize)");
  check->add_option("suite", suite, "Suite name")->required();
  check->add_option("--mmax", cfg.mmax, "Index sweep bound")
      ->capture_default_str();
  check->add_option("--beta", cfg.beta_list, "Comma-separated weight list")
      ->capture_default_str();
  check->add_option("--nr", cfg.res.nr, "Radial quadrature points")
      ->capture_default_str();
  check->add_option("--ntheta", cfg.res.ntheta, "Angular quadrature points")
      ->capture_default_str();
  check->add_option("--nphi", cfg.res.nphi, "Unitary-average phi points")
      ->capture_default_str();
  check->add_option("--npsi", cfg.res.npsi, "Unitary-average psi points")
      ->capture_default_str();
  check->add_option("--samples", cfg.samples, "Random sample count")
      ->capture_default_str();
  check->add_option("--f", cfg.f,
                    "Moment weight for the moments suite (one, z, zbar, "
                    "zsq_abs, theta, all)")
      ->default_str("all");
  check->add_option("--n", cfg.n, "Base index for the quantize suite")
      ->capture_default_str();
  check->add_option("--M", cfg.big_m, "Truncation bound for the quantize suite")
      ->capture_default_str();
  check->add_flag("--cross-stratum", cfg.cross_stratum,
                  "Also sweep the angle moment across strata and report the "
                  "measured deviations from the stated zeros");

  CLI::App* table = app.add_subcommand(
      "table",
      "Emit a data table (coeffs, norms, kernel, quantize-matrix)");
  table->add_option("what", what, "Table name")->required();
  table->add_option("--m", cfg.m, "First index")->capture_default_str();
  table->add_option("--n", cfg.n, "Second index")->capture_default_str();
  table->add_option("--beta", cfg.beta_single, "Weight parameter (> -1)")
      ->capture_default_str();
  table->add_option("--mmax", cfg.mmax, "Grid bound for norms")
      ->capture_default_str();
  table->add_option("--M", cfg.big_m, "Truncation bound")
      ->capture_default_str();
  table->add_option("--f", cfg.f, "Weight for quantize-matrix")
      ->capture_default_str();
  table->add_option("--xmax", cfg.xmax, "Kernel table range")
      ->capture_default_str();
  table->add_option("--points", cfg.points, "Kernel table points")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  // The moments suite defaults to the full weight sweep; eval's --f default
  // "z" only applies to tables.
  if (check->parsed() && check->get_option("--f")->count() == 0) cfg.f = "all";

  try {
    if (eval->parsed()) {
      if (zarg.empty() == qarg.empty()) {
        std::cerr << "error: eval needs exactly one of --z or --q\n";
        return kExitUsage;
      }
      return run_eval(cfg, zarg, qarg, dual);
    }
    if (check->parsed()) return run_check(cfg, suite);
    if (table->parsed()) return run_table(cfg, what);
  } catch (const lag2d::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  std::cerr << "error: no command\n";
  return kExitUsage;
}
