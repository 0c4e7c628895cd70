#include "lag2d/construct2d.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <tuple>

#include "lag2d/hypergeom.hpp"

namespace lag2d {

rpoly z_poly_rational(int m, int n, const rational& beta) {
  if (m < 0 || n < 0)
    throw std::invalid_argument("z_poly: indices must be nonnegative");
  if (m < n) return z_poly_rational(n, m, beta).conjugate();
  rpoly p;
  for (int k = 0; k <= n; ++k) {
    rational c = rational_pochhammer(rational(beta + (m - k + 1)), k) /
                 (rational_factorial(k) * rational_factorial(n - k));
    if ((n - k) % 2) c = -c;
    p.add_term(m - k, n - k, c);
  }
  return p;
}

poly z_poly(int m, int n, double beta) {
  // Memoized per thread; keyed on the exact bit pattern of beta.
  using key = std::tuple<int, int, std::uint64_t>;
  thread_local std::map<key, poly> cache;
  key k{m, n, std::bit_cast<std::uint64_t>(beta)};
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  poly p = to_double_poly(z_poly_rational(m, n, rat_from_double(beta)));
  cache.emplace(k, p);
  return p;
}

double norm_constant(int m, int n, double beta) {
  int lo = std::min(m, n), hi = std::max(m, n);
  double f = 1.0;
  for (int i = 2; i <= lo; ++i) f *= i;
  return std::tgamma(beta + hi + 1.0) / f;
}

const family1d& laguerre_family() {
  static const family1d fam{
      "laguerre",
      // coefficient of x^{n-j} in L_n^{(alpha)}(x), computed exactly and
      // rounded once so the bivariate builder matches z_poly bit for bit
      [](int n, double alpha, int j) {
        rational c = rational_pochhammer(rational(rat_from_double(alpha) + (n - j + 1)), j) /
                     (rational_factorial(j) * rational_factorial(n - j));
        if ((n - j) % 2) c = -c;
        return to_double(c);
      },
      [](int n, double alpha) {
        double f = 1.0;
        for (int i = 2; i <= n; ++i) f *= i;
        return std::tgamma(n + alpha + 1.0) / f;
      }};
  return fam;
}

poly build_f(const family1d& fam, int m, int n, double beta) {
  if (m < n) return build_f(fam, n, m, beta).conjugate();
  poly p;
  double alpha = (m - n) + beta;
  for (int j = 0; j <= n; ++j)
    p.add_term(m - j, n - j, fam.coeff(n, alpha, j));
  return p;
}

namespace {

cplx ipow(cplx z, int e) {
  cplx r(1.0, 0.0);
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

cplx z_eval_1f1(int m, int n, double beta, cplx z) {
  if (m < n) return std::conj(z_eval_1f1(n, m, beta, z));
  double x = std::norm(z);
  double pref = pochhammer(beta + (m - n) + 1.0, n) / factorial_d(n);
  return pref * ipow(z, m - n) * hyp1f1_terminating(n, beta + (m - n) + 1.0, x);
}

cplx z_eval_combined(int m, int n, double beta, cplx z) {
  int mn = std::min(m, n);
  int ad = std::abs(m - n);
  double pref = pochhammer(beta + ad + 1.0, mn) / factorial_d(mn);
  cplx zpow = ipow(z, std::max(m - n, 0)) * ipow(std::conj(z), std::max(n - m, 0));
  return pref * zpow * hyp1f1_terminating(mn, beta + ad + 1.0, std::norm(z));
}

void write_coeff_csv(std::ostream& os, int m, int n, double beta) {
  os << "m,n,beta,a,b,coeff\n";
  const poly p = z_poly(m, n, beta);
  for (const auto& [k, c] : p.terms())
    os << m << ',' << n << ',' << beta << ',' << k.first << ',' << k.second
       << ',' << c << '\n';
}

namespace {

// Shared recurrence sweep over one index pair, exact when C = rational.
template <class C>
report_batch recurrences_check_t(z_index idx, const C& beta, double tol) {
  const int m = idx.m, n = idx.n;
  report_batch batch;
  auto params = [&](const char* regime) {
    return nlohmann::json{{"m", m}, {"n", n}, {"beta", to_double(beta)}, {"regime", regime}};
  };
  // Residual relative to the operand size: floating sides carry roundoff
  // proportional to their coefficient magnitude, while exact sides still
  // produce a literal zero.
  auto residual_of = [](const bi_poly<C>& lhs, const bi_poly<C>& rhs) {
    const double scale = std::max(lhs.max_abs_coeff(), rhs.max_abs_coeff());
    return (lhs - rhs).max_abs_coeff() / (1.0 + scale);
  };
  auto Z = [&](int mm, int nn) { return z_poly_c(mm, nn, beta); };
  // A shifted neighbor with a negative index vanishes by convention.
  auto Zor = [&](int mm, int nn) {
    return (mm < 0 || nn < 0) ? bi_poly<C>{} : z_poly_c(mm, nn, beta);
  };
  const C bp1 = C(beta + C(1));

  if (m >= n) {
    batch.add(identity_report::make(
        "raise_m_shift_beta", params("valid"),
        residual_of(z_poly_c(m + 1, n, beta),
                    z_poly_c(m, n, bp1).shifted(1, 0)),
        tol));
  }
  if (m >= n + 1) {
    auto rhs = Zor(m - 1, n - 1) + Z(m - 1, n).shifted(1, 0);
    batch.add(identity_report::make("split_lower_m", params("valid"),
                                    residual_of(Z(m, n), rhs), tol));
  } else if (m == n && n >= 1) {
    auto rhs = Z(m - 1, n - 1) + Z(m - 1, n).shifted(1, 0);
    batch.add(identity_report::boundary("split_lower_m", params("diagonal"),
                                        residual_of(Z(m, n), rhs), tol));
  }
  if (m >= n + 1 || (m == n && m >= 1)) {
    auto lhs = Z(m - 1, n).scaled(C(beta + C(m)));
    auto rhs = Z(m, n + 1).scaled(C(n + 1)) + Z(m, n).shifted(0, 1);
    if (m >= n + 1) {
      batch.add(identity_report::make("three_term", params("valid"),
                                      residual_of(lhs, rhs), tol));
    } else {
      batch.add(identity_report::boundary("three_term", params("diagonal"),
                                          residual_of(lhs, rhs), tol));
    }
  }
  if (n >= 1) {
    auto lhs = Z(m - 1, n).shifted(1, 0).scaled(C(beta + C(m)));
    auto rhs = Z(m, n).scaled(C(beta + C(m - n))) - Z(m, n - 1).shifted(0, 1);
    if (m >= n + 1) {
      batch.add(identity_report::make("weighted_three_term", params("valid"),
                                      residual_of(lhs, rhs), tol));
    } else if (m == n) {
      batch.add(identity_report::boundary("weighted_three_term", params("diagonal"),
                                          residual_of(lhs, rhs), tol));
    }
  }
  return batch;
}

}  // namespace

report_batch z_recurrences_check(z_index idx, double beta) {
  return recurrences_check_t<double>(idx, beta, 1e-12);
}

report_batch z_recurrences_check_exact(z_index idx, const rational& beta) {
  return recurrences_check_t<rational>(idx, beta, 0.0);
}

}  // namespace lag2d
