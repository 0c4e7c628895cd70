#include "lag2d/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "lag2d/error.hpp"
#include "lag2d/quadrature.hpp"

namespace lag2d {

double quaternion::norm() const { return std::sqrt(norm_sq()); }

double quaternion::max_abs() const {
  return std::max({std::fabs(x0), std::fabs(x1), std::fabs(x2), std::fabs(x3)});
}

bool approx_equal(const quaternion& a, const quaternion& b, double tol) {
  double scale = 1.0 + std::max(a.max_abs(), b.max_abs());
  return (a - b).max_abs() <= tol * scale;
}

double mat2c::max_abs() const {
  return std::max({std::abs(m00), std::abs(m01), std::abs(m10), std::abs(m11)});
}

double max_abs_diff(const mat2c& a, const mat2c& b) {
  mat2c d = a - b;
  return d.max_abs();
}

mat2c to_matrix(const quaternion& q) {
  return {cplx(q.x0, q.x3), cplx(-q.x2, q.x1), cplx(q.x2, q.x1), cplx(q.x0, -q.x3)};
}

quaternion from_matrix(const mat2c& M) {
  double scale = std::max(1.0, M.max_abs());
  double defect = std::max(std::abs(M.m11 - std::conj(M.m00)),
                           std::abs(M.m10 + std::conj(M.m01)));
  if (defect > 1e-10 * scale)
    throw error(errc::not_a_quaternion_matrix, "embedding pattern violated");
  return {M.m00.real(), M.m10.imag(), M.m10.real(), M.m00.imag()};
}

cplx polar_factors::z_slice() const { return std::polar(r, theta); }

polar_factors polar_factorize(const quaternion& q) {
  double r = q.norm();
  if (r == 0.0)
    throw std::invalid_argument("polar_factorize: zero quaternion");
  polar_factors pf;
  pf.r = r;
  pf.theta = std::acos(std::clamp(q.x0 / r, -1.0, 1.0));
  double v = std::sqrt(q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3);
  if (v <= 1e-14 * r) {
    pf.degenerate = true;  // imaginary part vanishes, axis undefined
    return pf;
  }
  pf.phi = std::acos(std::clamp(q.x3 / v, -1.0, 1.0));
  double s = std::hypot(q.x1, q.x2);  // v sin(phi)
  if (s <= 1e-14 * r) {
    pf.degenerate = true;  // axis along k, psi undefined
    return pf;
  }
  pf.psi = std::atan2(q.x1, -q.x2);
  if (pf.psi < 0.0) pf.psi += 2.0 * M_PI;
  return pf;
}

mat2c axis_unitary(double phi, double psi) {
  double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
  return {std::polar(c, psi), cplx(0.0, s), cplx(0.0, s), std::polar(c, -psi)};
}

su2_rule su2_quadrature(int nphi, int npsi) {
  if (nphi < 1 || npsi < 1)
    throw std::invalid_argument("su2_quadrature: node counts must be positive");
  quad_rule_1d leg = gauss_legendre(nphi);  // nodes in (-1, 1), weights sum to 2
  su2_rule rule;
  rule.nphi = nphi;
  rule.npsi = npsi;
  rule.nodes.reserve(static_cast<std::size_t>(nphi) * npsi);
  for (int i = 0; i < nphi; ++i) {
    double phi = std::acos(std::clamp(leg.nodes[i], -1.0, 1.0));
    double w = leg.weights[i] / (2.0 * npsi);
    for (int j = 0; j < npsi; ++j)
      rule.nodes.push_back({phi, 2.0 * M_PI * j / npsi, w});
  }
  return rule;
}

quaternion sandwich_eval(z_index idx, double beta, const quaternion& q) {
  if (q.norm_sq() == 0.0) {
    cplx v = z_eval_combined(idx.m, idx.n, beta, cplx(0.0, 0.0));
    return {v.real(), 0.0, 0.0, v.imag()};
  }
  polar_factors pf = polar_factorize(q);
  cplx zc = z_eval_combined(idx.m, idx.n, beta, pf.z_slice());
  mat2c u = axis_unitary(pf.phi, pf.psi);
  mat2c M = u * mat2c::diag(zc, std::conj(zc)) * u.adjoint();
  return from_matrix(M);
}

quaternion eval_quaternion(const poly& p, const quaternion& q) {
  if (p.empty()) return {};
  if (q.norm_sq() == 0.0 && p.has_negative_exponents())
    throw error(errc::pole_at_zero, "Laurent term evaluated at q = 0");
  int lo = p.min_exponent();
  int hi = 0;
  for (const auto& [k, c] : p.terms()) hi = std::max({hi, k.first, k.second});
  std::vector<quaternion> qp(hi - lo + 1), qbp(hi - lo + 1);
  quaternion qb = q.conj();
  quaternion qinv, qbinv;
  if (lo < 0) {
    double ns = q.norm_sq();
    qinv = q.conj() * (1.0 / ns);
    qbinv = q * (1.0 / ns);
  }
  qp[-lo] = qbp[-lo] = quaternion{1.0, 0.0, 0.0, 0.0};
  for (int e = 1; e <= hi; ++e) {
    qp[e - lo] = qp[e - 1 - lo] * q;
    qbp[e - lo] = qbp[e - 1 - lo] * qb;
  }
  for (int e = -1; e >= lo; --e) {
    qp[e - lo] = qp[e + 1 - lo] * qinv;
    qbp[e - lo] = qbp[e + 1 - lo] * qbinv;
  }
  quaternion acc;
  for (const auto& [k, c] : p.terms())
    acc = acc + qp[k.first - lo] * qbp[k.second - lo] * c;
  return acc;
}

report_batch dual_path_check(int mmax, const std::vector<double>& betas,
                             int samples, std::uint64_t seed, double tol) {
  report_batch batch;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.2, 1.2);
  for (double beta : betas) {
    for (int m = 0; m <= mmax; ++m) {
      for (int n = 0; n <= mmax; ++n) {
        poly p = z_poly(m, n, beta);
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
          quaternion q{dist(rng), dist(rng), dist(rng), dist(rng)};
          quaternion lhs = sandwich_eval({m, n}, beta, q);
          quaternion rhs = eval_quaternion(p, q);
          double scale = 1.0 + std::max(lhs.max_abs(), rhs.max_abs());
          worst = std::max(worst, (lhs - rhs).max_abs() / scale);
        }
        batch.add(identity_report::make(
            "slice_vs_monomial_eval",
            {{"m", m}, {"n", n}, {"beta", beta}, {"samples", samples}}, worst,
            tol));
      }
    }
  }
  return batch;
}

}  // namespace lag2d
