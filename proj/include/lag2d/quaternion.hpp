#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "lag2d/bipoly.hpp"
#include "lag2d/construct2d.hpp"
#include "lag2d/report.hpp"

namespace lag2d {

// Real quaternion x0 + x1 i + x2 j + x3 k with the Hamilton product
// (i j = k = -j i, i^2 = j^2 = k^2 = -1).
struct quaternion {
  double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

  friend quaternion operator+(const quaternion& a, const quaternion& b) {
    return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
  }
  friend quaternion operator-(const quaternion& a, const quaternion& b) {
    return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
  }
  friend quaternion operator*(const quaternion& a, const quaternion& b) {
    return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
            a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
            a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
  }
  quaternion operator*(double s) const { return {x0 * s, x1 * s, x2 * s, x3 * s}; }

  quaternion conj() const { return {x0, -x1, -x2, -x3}; }
  double norm_sq() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
  double norm() const;
  double max_abs() const;
};

// Componentwise comparison with tolerance scaled by the value magnitude.
bool approx_equal(const quaternion& a, const quaternion& b, double tol = 1e-12);

// 2x2 complex matrix, row major.
struct mat2c {
  cplx m00, m01, m10, m11;

  friend mat2c operator*(const mat2c& a, const mat2c& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }
  friend mat2c operator+(const mat2c& a, const mat2c& b) {
    return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
  }
  friend mat2c operator-(const mat2c& a, const mat2c& b) {
    return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
  }
  mat2c scaled(cplx s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }
  mat2c adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }
  double max_abs() const;
  static mat2c identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static mat2c diag(cplx a, cplx d) { return {a, 0.0, 0.0, d}; }
};

double max_abs_diff(const mat2c& a, const mat2c& b);

// Embedding q -> [[x0 + i x3, -x2 + i x1], [x2 + i x1, x0 - i x3]].  It is an
// algebra homomorphism: to_matrix(p q) = to_matrix(p) to_matrix(q).
mat2c to_matrix(const quaternion& q);

// Inverse of the embedding.  M must match the pattern M11 = conj(M00),
// M10 = -conj(M01) within 1e-10 scaled by the matrix magnitude.
quaternion from_matrix(const mat2c& M);

// q = u diag(z, zbar) u* with z = r e^{i theta} the complex slice and u the
// special unitary
//   u(phi, psi) = [[cos(phi/2) e^{i psi}, i sin(phi/2)],
//                  [i sin(phi/2),         cos(phi/2) e^{-i psi}]].
// theta, phi lie in [0, pi], psi in [0, 2 pi).  When the (i, j) part of q
// vanishes the axis angles are not determined; they are set to zero and the
// degenerate flag is raised (reconstruction still holds).
struct polar_factors {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double psi = 0.0;
  bool degenerate = false;

  cplx z_slice() const;  // r e^{i theta}
};

polar_factors polar_factorize(const quaternion& q);  // requires q != 0
mat2c axis_unitary(double phi, double psi);          // u(phi, psi) above

// Quadrature for the normalized unitary-orbit average
// (1/4 pi) sin(phi) dphi dpsi: Gauss-Legendre in cos(phi) crossed with a
// uniform psi grid.  Weights sum to 1.  Exact for integrands polynomial of
// degree <= 2 nphi - 1 in cos(phi) times psi frequencies |k| < npsi.
struct su2_rule {
  struct node {
    double phi, psi, weight;
  };
  std::vector<node> nodes;
  int nphi = 0, npsi = 0;
};

su2_rule su2_quadrature(int nphi, int npsi);

// Z_{m,n}^{(beta)}(q, qbar) through the slice decomposition: factor q, form
// u diag(Zc, conj(Zc)) u* with Zc the complex value on the slice.  Agrees
// with the monomial evaluation for every index pair.
quaternion sandwich_eval(z_index idx, double beta, const quaternion& q);

// Monomial evaluation sum c_ab q^a qbar^b (q and qbar commute, so the order
// inside each term is immaterial).  Negative exponents require q != 0.
quaternion eval_quaternion(const poly& p, const quaternion& q);

// Cross-validates the two evaluation paths on random quaternions with
// components in [-1.2, 1.2]; one report per (m, n, beta) carrying the worst
// scaled componentwise deviation over the samples.
report_batch dual_path_check(int mmax, const std::vector<double>& betas,
                             int samples, std::uint64_t seed,
                             double tol = 1e-12);

}  // namespace lag2d
