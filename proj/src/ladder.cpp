#include "lag2d/ladder.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lag2d/quaternion.hpp"

namespace lag2d {

namespace {

nlohmann::json idx_params(std::initializer_list<int> indices, double beta) {
  return {{"indices", nlohmann::json(indices)}, {"beta", beta}};
}

// Shared row builder: residual in max-coefficient norm, with the postcondition
// that a verified identity never leaves a Laurent term behind.
// Residuals are measured relative to the operand size: floating-point rows
// carry roundoff proportional to the coefficients they combined, while exact
// rows still yield a literal zero.  `scale_hint` lets callers supply the
// magnitude of intermediates that cancelled before the comparison.
template <class C>
void add_row(report_batch& b, const char* id, std::initializer_list<int> idx,
             double beta, const bi_poly<C>& got, const bi_poly<C>& want,
             double tol, double scale_hint = 0.0) {
  const double scale =
      std::max({got.max_abs_coeff(), want.max_abs_coeff(), scale_hint});
  double res = (got - want).max_abs_coeff() / (1.0 + scale);
  auto r = identity_report::make(id, idx_params(idx, beta), res, tol);
  if (r.status == check_status::pass && got.has_negative_exponents())
    r.status = check_status::fail;
  b.add(r);
}

template <class C>
void add_boundary(report_batch& b, const char* id,
                  std::initializer_list<int> idx, double beta,
                  const bi_poly<C>& got, const bi_poly<C>& want, double tol) {
  const double scale = std::max(got.max_abs_coeff(), want.max_abs_coeff());
  double res = (got - want).max_abs_coeff() / (1.0 + scale);
  b.add(identity_report::boundary(id, idx_params(idx, beta), res, tol));
}

// All single-operator index-shift actions.  The strict wedge (m > n, resp.
// n > m for the mirrors) is where a1/a2_dag act as stated; the diagonal rows
// for those kinds record the deviation instead.
template <class C>
report_batch ladder_core(int mmax, const C& beta, double tol) {
  if (mmax < 2) throw std::invalid_argument("check_ladder: mmax must be >= 2");
  report_batch b;
  const double bd = to_double(beta);
  auto Z = [&](int m, int n) { return z_poly_c(m, n, beta); };
  auto ap = [&](ladder_kind k, const bi_poly<C>& p) {
    return apply_ladder(k, beta, p);
  };

  for (int m = 0; m <= mmax; ++m) {
    for (int n = 0; n <= mmax; ++n) {
      const auto z = Z(m, n);
      if (m >= n) {
        const C fac_m = C(beta + C(m));
        if (n < m) {
          add_row(b, "a1_lowers_m", {m, n}, bd, ap(ladder_kind::a1, z),
                  Z(m - 1, n).scaled(fac_m), tol);
          add_row(b, "a2_dag_raises_n", {m, n}, bd, ap(ladder_kind::a2_dag, z),
                  Z(m, n + 1).scaled(C(n + 1)), tol);
          add_row(b, "b1_lowers_m", {m, n}, bd, ap(ladder_kind::b1, z),
                  Z(m - 1, n).scaled(fac_m), tol);
          add_row(b, "b2_dag_raises_n", {m, n}, bd, ap(ladder_kind::b2_dag, z),
                  Z(m, n + 1).scaled(C(n + 1)), tol);
        } else {
          // m == n: the stated lowering/raising actions fail on the diagonal.
          if (m >= 1)
            add_boundary(b, "a1_lowers_m", {m, n}, bd, ap(ladder_kind::a1, z),
                         Z(m - 1, n).scaled(fac_m), tol);
          add_boundary(b, "a2_dag_raises_n", {m, n}, bd,
                       ap(ladder_kind::a2_dag, z), Z(m, n + 1).scaled(C(n + 1)),
                       tol);
        }
        add_row(b, "a1_dag_raises_m", {m, n}, bd, ap(ladder_kind::a1_dag, z),
                Z(m + 1, n), tol);
        add_row(b, "b1_dag_raises_m", {m, n}, bd, ap(ladder_kind::b1_dag, z),
                Z(m + 1, n), tol);
        if (n >= 1) {
          add_row(b, "a2_lowers_n", {m, n}, bd, ap(ladder_kind::a2, z),
                  Z(m, n - 1), tol);
          add_row(b, "b2_lowers_n", {m, n}, bd, ap(ladder_kind::b2, z),
                  Z(m, n - 1), tol);
        }
      }
      if (n >= m) {
        const C fac_n = C(beta + C(n));
        if (m < n) {
          add_row(b, "mirror_a1_lowers_n", {m, n}, bd, ap(ladder_kind::A1, z),
                  Z(m, n - 1).scaled(fac_n), tol);
          add_row(b, "mirror_a2_dag_raises_m", {m, n}, bd,
                  ap(ladder_kind::A2_dag, z), Z(m + 1, n).scaled(C(m + 1)),
                  tol);
        }
        add_row(b, "mirror_a1_dag_raises_n", {m, n}, bd,
                ap(ladder_kind::A1_dag, z), Z(m, n + 1), tol);
        if (m >= 1)
          add_row(b, "mirror_a2_lowers_m", {m, n}, bd, ap(ladder_kind::A2, z),
                  Z(m - 1, n), tol);
      }
    }
  }
  return b;
}

// Commutator actions and the number-operator compositions, applied to the
// family members whose shifted neighbors all stay in the strict wedge.
template <class C>
report_batch commutator_core(int mmax, const C& beta, double tol) {
  if (mmax < 3)
    throw std::invalid_argument("check_commutators: mmax must be >= 3");
  report_batch b;
  const double bd = to_double(beta);
  using K = ladder_kind;
  for (int m = 0; m <= mmax; ++m) {
    for (int n = 0; n + 1 < m; ++n) {
      const auto z = z_poly_c(m, n, beta);
      const bi_poly<C> zero;
      // The two composition orders cancel; their size sets the roundoff
      // scale for the difference.
      auto comm_row = [&](const char* id, K x, K y, const bi_poly<C>& want) {
        const bi_poly<C> u = apply_ladder(x, beta, apply_ladder(y, beta, z));
        const bi_poly<C> v = apply_ladder(y, beta, apply_ladder(x, beta, z));
        add_row(b, id, {m, n}, bd, u - v, want, tol,
                std::max(u.max_abs_coeff(), v.max_abs_coeff()));
      };
      comm_row("comm_a1_a2_vanishes", K::a1, K::a2, zero);
      comm_row("comm_a1_a1dag_identity", K::a1, K::a1_dag, z);
      comm_row("comm_a2_a2dag_identity", K::a2, K::a2_dag, z);
      comm_row("comm_a1_a2dag_vanishes", K::a1, K::a2_dag, zero);
      comm_row("comm_a2_a1dag_vanishes", K::a2, K::a1_dag, zero);
      add_row(b, "number_op_a1dag_a1", {m, n}, bd,
              apply_ladder(K::a1_dag, beta, apply_ladder(K::a1, beta, z)),
              z.scaled(C(beta + C(m))), tol);
      add_row(b, "number_op_a2dag_a2", {m, n}, bd,
              apply_ladder(K::a2_dag, beta, apply_ladder(K::a2, beta, z)),
              z.scaled(C(n)), tol);
    }
  }
  return b;
}

template <class C>
report_batch diff_core(int mmax, const C& beta, double tol) {
  if (mmax < 1)
    throw std::invalid_argument("check_diff_recurrences: mmax must be >= 1");
  report_batch b;
  const double bd = to_double(beta);
  auto Z = [&](int m, int n) { return z_poly_c(m, n, beta); };
  for (int m = 0; m <= mmax; ++m) {
    for (int n = 0; n <= mmax; ++n) {
      const auto z = Z(m, n);
      const auto w_dw = z.d_dw().shifted(1, 0);
      const auto wb_dwb = z.d_dwbar().shifted(0, 1);
      // Grading relation, index-universal.
      add_row(b, "grading_w_dw_minus_wbar_dwbar", {m, n}, bd, w_dw - wb_dwb,
              z.scaled(C(m - n)), tol);
      if (m < n || n < 1) continue;
      const auto z_low = Z(m, n - 1);
      const auto z_diag = Z(m - 1, n - 1);
      const C fac_m = C(beta + C(m));
      add_row(b, "w_dw_splits_off_lower_n", {m, n}, bd, w_dw,
              z.scaled(C(m - n)) - z_low.shifted(0, 1), tol);
      add_row(b, "w_dw_splits_off_diag", {m, n}, bd, w_dw,
              z.scaled(C(m)) - z_diag.scaled(fac_m), tol);
      add_row(b, "wbar_dwbar_lowers_n", {m, n}, bd, wb_dwb,
              -(z_low.shifted(0, 1)), tol);
      add_row(b, "wbar_dwbar_splits_off_diag", {m, n}, bd, wb_dwb,
              z.scaled(C(n)) - z_diag.scaled(fac_m), tol);
      add_row(b, "weighted_grading_hits_diag", {m, n}, bd,
              w_dw.scaled(C(n)) - wb_dwb.scaled(C(m)),
              z_diag.scaled(C(C(m - n) * fac_m)), tol);
    }
  }
  return b;
}

}  // namespace

const char* ladder_kind_name(ladder_kind k) {
  switch (k) {
    case ladder_kind::a1: return "a1";
    case ladder_kind::a1_dag: return "a1_dag";
    case ladder_kind::a2: return "a2";
    case ladder_kind::a2_dag: return "a2_dag";
    case ladder_kind::A1: return "A1";
    case ladder_kind::A1_dag: return "A1_dag";
    case ladder_kind::A2: return "A2";
    case ladder_kind::A2_dag: return "A2_dag";
    case ladder_kind::b1: return "b1";
    case ladder_kind::b1_dag: return "b1_dag";
    case ladder_kind::b2: return "b2";
    case ladder_kind::b2_dag: return "b2_dag";
  }
  return "?";
}

poly apply(const ladder_op& op, const poly& p) {
  return apply_ladder(op.kind, op.beta, p);
}

report_batch check_ladder_complex(int mmax, double beta) {
  return ladder_core<double>(mmax, beta, 1e-12);
}

report_batch check_ladder_complex_exact(int mmax, const rational& beta) {
  return ladder_core<rational>(mmax, beta, 0.0);
}

report_batch check_commutators(int mmax, double beta) {
  return commutator_core<double>(mmax, beta, 1e-12);
}

report_batch check_commutators_exact(int mmax, const rational& beta) {
  return commutator_core<rational>(mmax, beta, 0.0);
}

report_batch check_diff_recurrences(int mmax, double beta) {
  return diff_core<double>(mmax, beta, 1e-12);
}

report_batch check_diff_recurrences_exact(int mmax, const rational& beta) {
  return diff_core<rational>(mmax, beta, 0.0);
}

report_batch check_ladder_quaternionic(int mmax, double beta, int samples,
                                       unsigned seed) {
  if (mmax < 2)
    throw std::invalid_argument("check_ladder_quaternionic: mmax must be >= 2");
  if (samples < 1)
    throw std::invalid_argument("check_ladder_quaternionic: samples must be >= 1");
  report_batch b;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.2, 1.2);

  // One row per identity and index pair; residual is the worst componentwise
  // deviation between the two evaluation paths over all sampled quaternions,
  // scaled by 1 + the larger magnitude.
  auto numeric_row = [&](const char* id, int m, int n, const poly& lhs,
                         const poly& rhs) {
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
      quaternion q{U(rng), U(rng), U(rng), U(rng)};
      quaternion l = eval_quaternion(lhs, q);
      quaternion r = eval_quaternion(rhs, q);
      double dev = (l - r).max_abs() / (1.0 + std::max(l.max_abs(), r.max_abs()));
      worst = std::max(worst, dev);
    }
    auto params = idx_params({m, n}, beta);
    params["samples"] = samples;
    b.add(identity_report::make(id, params, worst, 1e-11));
  };

  for (int m = 0; m <= mmax; ++m) {
    for (int n = 0; n <= m; ++n) {
      const poly z = z_poly(m, n, beta);
      if (n < m) {
        add_row(b, "b1_lowers_m_formal", {m, n}, beta,
                apply_ladder(ladder_kind::b1, beta, z),
                z_poly(m - 1, n, beta).scaled(beta + m), 1e-12);
        add_row(b, "b2_dag_raises_n_formal", {m, n}, beta,
                apply_ladder(ladder_kind::b2_dag, beta, z),
                z_poly(m, n + 1, beta).scaled(double(n + 1)), 1e-12);
        numeric_row("b1_lowers_m_numeric", m, n,
                    apply_ladder(ladder_kind::b1, beta, z),
                    z_poly(m - 1, n, beta).scaled(beta + m));
        numeric_row("b2_dag_raises_n_numeric", m, n,
                    apply_ladder(ladder_kind::b2_dag, beta, z),
                    z_poly(m, n + 1, beta).scaled(double(n + 1)));
      }
      add_row(b, "b1_dag_raises_m_formal", {m, n}, beta,
              apply_ladder(ladder_kind::b1_dag, beta, z), z_poly(m + 1, n, beta),
              1e-12);
      numeric_row("b1_dag_raises_m_numeric", m, n,
                  apply_ladder(ladder_kind::b1_dag, beta, z),
                  z_poly(m + 1, n, beta));
      if (n >= 1) {
        add_row(b, "b2_lowers_n_formal", {m, n}, beta,
                apply_ladder(ladder_kind::b2, beta, z), z_poly(m, n - 1, beta),
                1e-12);
        numeric_row("b2_lowers_n_numeric", m, n,
                    apply_ladder(ladder_kind::b2, beta, z),
                    z_poly(m, n - 1, beta));
      }
    }
  }
  return b;
}

report_batch check_adjointness(int mmax, double beta, const resolution& res,
                               double tol) {
  if (mmax < 2)
    throw std::invalid_argument("check_adjointness: mmax must be >= 2");
  report_batch b;
  auto inner = [&](const poly& p, const poly& q) {
    return complex_inner(p, q, beta, res.nr, res.ntheta);
  };
  auto pair_row = [&](const char* id, int m, int n, int s, int t, cplx lhs,
                      cplx rhs) {
    double dev = std::abs(lhs - rhs) /
                 (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
    auto r = identity_report::make(id, idx_params({m, n, s, t}, beta), dev, tol);
    r.extra = {{"lhs", {lhs.real(), lhs.imag()}},
               {"rhs", {rhs.real(), rhs.imag()}}};
    b.add(r);
  };

  for (int m = 0; m <= mmax; ++m) {
    for (int n = 0; n <= m; ++n) {
      const poly p = z_poly(m, n, beta);
      for (int s = 0; s <= mmax; ++s) {
        for (int t = 0; t <= s; ++t) {
          const poly q = z_poly(s, t, beta);
          // <a1 p, q> = <p, a1_dag q>: a1 p stays polynomial off-diagonal only.
          if (m > n)
            pair_row("adjoint_pair_a1", m, n, s, t,
                     inner(apply_ladder(ladder_kind::a1, beta, p), q),
                     inner(p, apply_ladder(ladder_kind::a1_dag, beta, q)));
          // <a2 p, q> = <p, a2_dag q>: a2_dag q stays polynomial for s > t.
          if (n >= 1 && s > t)
            pair_row("adjoint_pair_a2", m, n, s, t,
                     inner(apply_ladder(ladder_kind::a2, beta, p), q),
                     inner(p, apply_ladder(ladder_kind::a2_dag, beta, q)));
        }
      }
    }
  }
  return b;
}

nlohmann::json ladder_reports_json(const report_batch& b) {
  auto arr = nlohmann::json::array();
  for (const auto& r : b.reports()) {
    arr.push_back({{"identity", r.identity},
                   {"indices", r.params.value("indices", nlohmann::json::array())},
                   {"beta", r.params.value("beta", 0.0)},
                   {"residual", r.residual},
                   {"status", status_name(r.status)}});
  }
  return arr;
}

}  // namespace lag2d
