#include "lag2d/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "lag2d/error.hpp"
#include "lag2d/hypergeom.hpp"

namespace lag2d {

double quad_rule_1d::weight_sum() const {
  kahan acc;
  for (double w : weights) acc.add(w);
  return acc.value();
}

namespace {

// Implicit-shift QL iteration on a symmetric tridiagonal matrix.  d holds the
// diagonal, e the subdiagonal (e[i] couples rows i and i+1).  z starts as the
// first unit vector and finishes as the first component of each normalized
// eigenvector; orthogonal updates preserve its norm.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  e.resize(n, 0.0);  // e[n-1] used as workspace
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw error(errc::eigen_failure, "QL iteration limit reached");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        bool underflow = false;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

quad_rule_1d rule_from_jacobi(std::vector<double> d, std::vector<double> e,
                              double mu0) {
  const int n = static_cast<int>(d.size());
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  tridiag_ql(d, e, z);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return d[a] < d[b]; });
  quad_rule_1d rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = d[order[i]];
    rule.weights[i] = mu0 * z[order[i]] * z[order[i]];
  }
  rule.exactness_degree = 2 * n - 1;
  return rule;
}

}  // namespace

quad_rule_1d gauss_laguerre(double alpha, int npts) {
  if (!(alpha > -1.0))
    throw std::invalid_argument("gauss_laguerre: alpha must exceed -1");
  if (npts < 1) throw std::invalid_argument("gauss_laguerre: npts must be >= 1");
  std::vector<double> d(npts), e(npts > 1 ? npts - 1 : 0);
  for (int k = 0; k < npts; ++k) d[k] = 2.0 * k + alpha + 1.0;
  for (int k = 0; k + 1 < npts; ++k)
    e[k] = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
  return rule_from_jacobi(std::move(d), std::move(e), std::tgamma(alpha + 1.0));
}

quad_rule_1d gauss_legendre(int npts) {
  if (npts < 1) throw std::invalid_argument("gauss_legendre: npts must be >= 1");
  std::vector<double> d(npts, 0.0), e(npts > 1 ? npts - 1 : 0);
  for (int k = 0; k + 1 < npts; ++k) {
    double kk = k + 1.0;
    e[k] = kk / std::sqrt(4.0 * kk * kk - 1.0);
  }
  return rule_from_jacobi(std::move(d), std::move(e), 2.0);
}

void write_rule_csv(std::ostream& os, const quad_rule_1d& rule) {
  os << "node,weight\n";
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    os << rule.nodes[i] << ',' << rule.weights[i] << '\n';
}

namespace {

// Power moments sum_i w_i t_i^j of a 1D rule, j = 0..jmax.  Extended
// precision keeps the cancellation error of downstream coefficient sums well
// below the documented tolerances; seeding the running product with the
// weight keeps intermediates in range for high powers of the largest nodes.
std::vector<long double> rule_moments(const quad_rule_1d& rule, int jmax) {
  std::vector<long double> mom(jmax + 1, 0.0L);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    long double p = rule.weights[i];
    const long double x = rule.nodes[i];
    for (int j = 0; j <= jmax; ++j) {
      mom[j] += p;
      p *= x;
    }
  }
  return mom;
}

struct integrand_profile {
  int ang_max = 0;       // max |a - b|
  int rad_even_max = -1; // max t power among even a+b terms
  int rad_odd_max = -1;  // max t power among odd a+b terms
};

integrand_profile profile_of(const poly& F) {
  integrand_profile pr;
  for (const auto& [k, c] : F.terms()) {
    pr.ang_max = std::max(pr.ang_max, std::abs(k.first - k.second));
    int p = k.first + k.second;
    if (p % 2 == 0)
      pr.rad_even_max = std::max(pr.rad_even_max, p / 2);
    else
      pr.rad_odd_max = std::max(pr.rad_odd_max, (p - 1) / 2);
  }
  return pr;
}

void require_polynomial(const poly& F) {
  if (F.has_negative_exponents())
    throw error(errc::quadrature_under_resolved,
                "Laurent integrand not integrable by polynomial rules");
}

// Mode-resolved core: keep the Fourier modes the ntheta-point circle rule
// preserves (k == 0 mod ntheta), sum their radial parts with the
// Gauss-Laguerre rule after t = r^2.  The resolution preconditions guarantee
// no aliased mode survives and the radial rule is exact.
double inner_core(const poly& F, double beta, int nr, int ntheta) {
  require_polynomial(F);
  integrand_profile pr = profile_of(F);
  if (ntheta <= pr.ang_max)
    throw error(errc::quadrature_under_resolved,
                "ntheta must exceed the angular frequency " +
                    std::to_string(pr.ang_max));
  // With ntheta above every frequency, the only mode the circle rule keeps is
  // k = 0, i.e. terms with a == b; only their radial powers need exactness.
  int rad_max = -1;
  for (const auto& [k, c] : F.terms())
    if (k.first == k.second) rad_max = std::max(rad_max, k.first);
  if (rad_max > 2 * nr - 1)
    throw error(errc::quadrature_under_resolved,
                "radial degree " + std::to_string(rad_max) +
                    " exceeds rule exactness");
  if (rad_max < 0) return 0.0;
  std::vector<long double> mom = rule_moments(gauss_laguerre(beta, nr), rad_max);
  long double acc = 0.0L;
  for (const auto& [k, c] : F.terms())
    if (k.first == k.second) acc += static_cast<long double>(c) * mom[k.first];
  return static_cast<double>(acc);
}

}  // namespace

cplx complex_inner(const poly& p, const poly& q, double beta, int nr,
                   int ntheta) {
  return {inner_core(p * q.conjugate(), beta, nr, ntheta), 0.0};
}

cplx complex_inner_grid(const poly& p, const poly& q, double beta, int nr,
                        int ntheta) {
  poly F = p * q.conjugate();
  require_polynomial(F);
  integrand_profile pr = profile_of(F);
  if (ntheta <= pr.ang_max || pr.rad_even_max > 2 * nr - 1)
    throw error(errc::quadrature_under_resolved, "grid rule under-resolved");
  quad_rule_1d rad = gauss_laguerre(beta, nr);
  cplx acc(0.0, 0.0);
  for (int i = 0; i < nr; ++i) {
    double r = std::sqrt(rad.nodes[i]);
    cplx ring(0.0, 0.0);
    for (int j = 0; j < ntheta; ++j) {
      cplx zij = std::polar(r, 2.0 * M_PI * j / ntheta);
      ring += eval_complex(F, zij);
    }
    acc += rad.weights[i] * ring / static_cast<double>(ntheta);
  }
  return acc;
}

const char* moment_tag_name(moment_tag f) {
  switch (f) {
    case moment_tag::one: return "one";
    case moment_tag::z: return "z";
    case moment_tag::zbar: return "zbar";
    case moment_tag::zsq_abs: return "zsq_abs";
    case moment_tag::theta: return "theta";
  }
  return "unknown";
}

cplx moment_inner(moment_tag f, const poly& p, const poly& q, double beta,
                  int nr, int ntheta) {
  switch (f) {
    case moment_tag::one:
      return complex_inner(p, q, beta, nr, ntheta);
    case moment_tag::z:
      return {inner_core(p.shifted(1, 0) * q.conjugate(), beta, nr, ntheta), 0.0};
    case moment_tag::zbar:
      return {inner_core(p.shifted(0, 1) * q.conjugate(), beta, nr, ntheta), 0.0};
    case moment_tag::zsq_abs:
      return {inner_core(p.shifted(1, 1) * q.conjugate(), beta, nr, ntheta), 0.0};
    case moment_tag::theta:
      break;
  }
  // theta: integral over the angle of theta e^{i k theta} is 2 pi^2 at k = 0
  // and 2 pi / (i k) otherwise; radial parts are Gauss-Laguerre sums, with
  // the alpha + 1/2 companion rule covering odd powers of r^2 exactly.
  poly F = p * q.conjugate();
  require_polynomial(F);
  integrand_profile pr = profile_of(F);
  if (std::max(pr.rad_even_max, pr.rad_odd_max) > 2 * nr - 1)
    throw error(errc::quadrature_under_resolved, "radial degree exceeds rule");
  std::vector<long double> mom_even, mom_odd;
  if (pr.rad_even_max >= 0)
    mom_even = rule_moments(gauss_laguerre(beta, nr), pr.rad_even_max);
  if (pr.rad_odd_max >= 0)
    mom_odd = rule_moments(gauss_laguerre(beta + 0.5, nr), pr.rad_odd_max);
  long double re = 0.0L, im = 0.0L;
  for (const auto& [k, c] : F.terms()) {
    int kk = k.first - k.second;
    int P = k.first + k.second;
    long double rad =
        (P % 2 == 0) ? 0.5L * mom_even[P / 2] : 0.5L * mom_odd[(P - 1) / 2];
    if (kk == 0) {
      // (1/pi) * 2 pi^2 * rad
      re += c * 2.0L * M_PI * rad;
    } else {
      // (1/pi) * (2 pi / (i k)) * rad = -(2 i / k) * rad
      im += -c * 2.0L / kk * rad;
    }
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

const char* qmoment_tag_name(qmoment_tag f) {
  switch (f) {
    case qmoment_tag::one: return "one";
    case qmoment_tag::zsq_abs: return "zsq_abs";
    case qmoment_tag::q: return "q";
    case qmoment_tag::qbar: return "qbar";
  }
  return "unknown";
}

mat2c quaternion_inner(z_index idxA, z_index idxB, qmoment_tag f, double beta,
                       const resolution& res) {
  poly A = z_poly(idxA.m, idxA.n, beta);
  poly B = z_poly(idxB.m, idxB.n, beta);
  int da = 0, db = 0;
  switch (f) {
    case qmoment_tag::one: break;
    case qmoment_tag::zsq_abs: da = 1, db = 1; break;
    case qmoment_tag::q: da = 1; break;
    case qmoment_tag::qbar: db = 1; break;
  }
  double I = inner_core(A.shifted(da, db) * B.conjugate(), beta, res.nr,
                        res.ntheta);
  // The slice integrand is real here (real coefficients), so the second
  // diagonal entry equals the first and the average is over u diag(I, I) u*.
  mat2c acc{0.0, 0.0, 0.0, 0.0};
  su2_rule rule = su2_quadrature(res.nphi, res.npsi);
  for (const auto& nd : rule.nodes) {
    mat2c u = axis_unitary(nd.phi, nd.psi);
    mat2c M = u * mat2c::diag(I, I) * u.adjoint();
    acc = acc + M.scaled(nd.weight);
  }
  return acc;
}

mat2c quaternion_inner_grid(z_index idxA, z_index idxB, qmoment_tag f,
                            double beta, const resolution& res) {
  poly A = z_poly(idxA.m, idxA.n, beta);
  poly B = z_poly(idxB.m, idxB.n, beta);
  quad_rule_1d rad = gauss_laguerre(beta, res.nr);
  su2_rule urule = su2_quadrature(res.nphi, res.npsi);
  std::vector<mat2c> us;
  us.reserve(urule.nodes.size());
  for (const auto& nd : urule.nodes) us.push_back(axis_unitary(nd.phi, nd.psi));
  std::complex<long double> a00 = 0, a01 = 0, a10 = 0, a11 = 0;
  for (int i = 0; i < res.nr; ++i) {
    const double r = std::sqrt(rad.nodes[i]);
    for (int j = 0; j < res.ntheta; ++j) {
      const cplx z = std::polar(r, 2.0 * M_PI * j / res.ntheta);
      for (std::size_t k = 0; k < urule.nodes.size(); ++k) {
        const auto& nd = urule.nodes[k];
        const mat2c& u = us[k];
        const quaternion q =
            from_matrix(u * mat2c::diag(z, std::conj(z)) * u.adjoint());
        quaternion val = eval_quaternion(A, q) * eval_quaternion(B, q).conj();
        switch (f) {
          case qmoment_tag::one: break;
          case qmoment_tag::zsq_abs: val = val * q.norm_sq(); break;
          case qmoment_tag::q: val = q * val; break;
          case qmoment_tag::qbar: val = q.conj() * val; break;
        }
        const long double w =
            static_cast<long double>(rad.weights[i]) * nd.weight / res.ntheta;
        const mat2c M = to_matrix(val);
        a00 += static_cast<std::complex<long double>>(M.m00) * w;
        a01 += static_cast<std::complex<long double>>(M.m01) * w;
        a10 += static_cast<std::complex<long double>>(M.m10) * w;
        a11 += static_cast<std::complex<long double>>(M.m11) * w;
      }
    }
  }
  return {static_cast<cplx>(a00), static_cast<cplx>(a01),
          static_cast<cplx>(a10), static_cast<cplx>(a11)};
}

report_batch orthogonality_check(int idx_bound, double beta,
                                 const resolution& res, double tol) {
  report_batch batch;
  std::vector<z_index> basis;
  for (int m = 0; m <= idx_bound; ++m)
    for (int n = 0; n <= idx_bound; ++n) basis.push_back({m, n});
  double worst = 0.0;
  z_index worst_a{}, worst_b{};
  for (const auto& A : basis) {
    poly pa = z_poly(A.m, A.n, beta);
    double ca = norm_constant(A.m, A.n, beta);
    for (const auto& B : basis) {
      poly pb = z_poly(B.m, B.n, beta);
      double cb = norm_constant(B.m, B.n, beta);
      cplx g = complex_inner(pa, pb, beta, res.nr, res.ntheta);
      double expect = (A == B) ? 1.0 : 0.0;
      double dev = std::abs(g / std::sqrt(ca * cb) - expect);
      if (dev > worst) {
        worst = dev;
        worst_a = A;
        worst_b = B;
      }
      if (dev > tol)
        batch.add(identity_report::make(
            "orthonormality_pair",
            {{"m", A.m}, {"n", A.n}, {"s", B.m}, {"t", B.n}, {"beta", beta}},
            dev, tol));
    }
  }
  batch.add(identity_report::make(
      "orthonormality_gram",
      {{"idx_bound", idx_bound},
       {"beta", beta},
       {"worst_pair", {worst_a.m, worst_a.n, worst_b.m, worst_b.n}}},
      worst, tol));
  return batch;
}

report_batch quaternionic_orthogonality_check(int idx_bound, double beta,
                                              const resolution& res,
                                              double tol) {
  report_batch batch;
  double worst = 0.0;
  for (int m = 0; m <= idx_bound; ++m)
    for (int n = 0; n <= idx_bound; ++n)
      for (int s = 0; s <= idx_bound; ++s)
        for (int t = 0; t <= idx_bound; ++t) {
          z_index A{m, n}, B{s, t};
          mat2c G = quaternion_inner(A, B, qmoment_tag::one, beta, res);
          double scale = std::sqrt(norm_constant(m, n, beta) *
                                   norm_constant(s, t, beta));
          double expect = (A == B) ? 1.0 : 0.0;
          mat2c target = mat2c::identity().scaled(expect);
          double dev = max_abs_diff(G.scaled(1.0 / scale), target);
          worst = std::max(worst, dev);
          if (dev > tol)
            batch.add(identity_report::make(
                "quaternionic_orthonormality_pair",
                {{"m", m}, {"n", n}, {"s", s}, {"t", t}, {"beta", beta}}, dev,
                tol));
        }
  batch.add(identity_report::make(
      "quaternionic_orthonormality_gram",
      {{"idx_bound", idx_bound}, {"beta", beta}}, worst, tol));
  return batch;
}

report_batch confluent_orthogonality_check(double c, int nmax, int npts,
                                           double tol) {
  report_batch batch;
  quad_rule_1d rule = gauss_laguerre(c - 1.0, npts);
  double worst = 0.0;
  int wm = 0, wn = 0;
  for (int m = 0; m <= nmax; ++m)
    for (int n = 0; n <= nmax; ++n) {
      kahan acc;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc.add(rule.weights[i] * hyp1f1_terminating(m, c, rule.nodes[i]) *
                hyp1f1_terminating(n, c, rule.nodes[i]));
      double target = 0.0;
      if (m == n) {
        double fact = 1.0;
        for (int i = 2; i <= n; ++i) fact *= i;
        target = std::tgamma(c) * fact / pochhammer(c, n);
      }
      double dev = std::fabs(acc.value() - target) / (1.0 + std::fabs(target));
      if (dev > worst) {
        worst = dev;
        wm = m;
        wn = n;
      }
    }
  batch.add(identity_report::make(
      "confluent_orthogonality_integral",
      {{"c", c}, {"nmax", nmax}, {"npts", npts}, {"worst_pair", {wm, wn}}},
      worst, tol));
  return batch;
}

}  // namespace lag2d
