#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lag2d/bipoly.hpp"
#include "lag2d/construct2d.hpp"
#include "lag2d/quaternion.hpp"
#include "lag2d/report.hpp"

namespace lag2d {

// One-dimensional Gaussian rule.  Weights are positive and sum to the zeroth
// moment of the weight function.
struct quad_rule_1d {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exactness_degree = 0;

  double weight_sum() const;
};

// Golub-Welsch rule for the weight t^alpha e^{-t} on (0, inf): nodes are the
// eigenvalues of the symmetric tridiagonal Jacobi matrix with diagonal
// 2k + alpha + 1 and off-diagonal sqrt(k (k + alpha)); weights are
// Gamma(alpha+1) times the squared first eigenvector components.  Exact for
// polynomials of degree <= 2 npts - 1.
quad_rule_1d gauss_laguerre(double alpha, int npts);

// Same construction for the weight 1 on (-1, 1); weights sum to 2.
quad_rule_1d gauss_legendre(int npts);

void write_rule_csv(std::ostream& os, const quad_rule_1d& rule);

// Node counts for the product measures: nr radial Gauss-Laguerre points,
// ntheta uniform circle points, nphi x npsi unitary-average points.
struct resolution {
  int nr = 64;
  int ntheta = 64;
  int nphi = 16;
  int npsi = 16;
};

// Inner product <p|q> = integral of p(z, zbar) conj(q(z, zbar)) against the
// weight r^{2 beta + 1} e^{-r^2} dr dtheta / pi.  Realized as the product of
// the ntheta-point circle rule with gauss_laguerre(beta) after t = r^2.  The
// circle rule annihilates every Fourier mode e^{i k theta} with k not a
// multiple of ntheta, and that action is applied exactly (integer mode
// arithmetic), so only the radial node sums carry rounding.  Requires
// ntheta > (max angular frequency) and 2 nr - 1 >= (max radial power in t).
cplx complex_inner(const poly& p, const poly& q, double beta, int nr,
                   int ntheta);

// Literal 2D tensor-grid evaluation of the same integral (every node of the
// product rule visited).  Slower and noisier; used to cross-validate the
// mode-resolved path.
cplx complex_inner_grid(const poly& p, const poly& q, double beta, int nr,
                        int ntheta);

enum class moment_tag { one, z, zbar, zsq_abs, theta };
const char* moment_tag_name(moment_tag f);

// Integral of f(z) p(z, zbar) conj(q(z, zbar)) under the same weight.  For
// f = theta the angular factor theta e^{i k theta} is integrated in closed
// form (2 pi^2 at k = 0, 2 pi / (i k) otherwise) and combined with radial
// Gauss-Laguerre sums; odd radial powers use the alpha + 1/2 companion rule,
// which is exact for them.
cplx moment_inner(moment_tag f, const poly& p, const poly& q, double beta,
                  int nr, int ntheta);

enum class qmoment_tag { one, zsq_abs, q, qbar };
const char* qmoment_tag_name(qmoment_tag f);

// Integral of f(q) Z_A(q, qbar) conj(Z_B(q, qbar)) over the product of the
// complex weight and the normalized unitary-orbit average, as a 2x2 matrix.
// Through the slice decomposition the integrand is u diag(g, conj g) u* with
// g the complex integrand, so the matrix equals the (nphi x npsi)-node
// average of u diag(I, conj I) u* where I is the complex integral.
mat2c quaternion_inner(z_index idxA, z_index idxB, qmoment_tag f, double beta,
                       const resolution& res);

// Same integral evaluated the hard way: every node of the 4D product rule
// (nr x ntheta x nphi x npsi) is visited, the quaternion point is assembled
// from its slice coordinates, and both factors are evaluated by monomial
// Hamilton products.  Independent of the slice shortcut above; used to
// cross-validate it.
mat2c quaternion_inner_grid(z_index idxA, z_index idxB, qmoment_tag f,
                            double beta, const resolution& res);

// Gram matrix of {Z_{m,n} : m, n <= idx_bound} against the quadrature inner
// product, normalized by the closed-form norms; reports the worst deviation
// from the identity matrix (plus one row per failing pair, if any).
report_batch orthogonality_check(int idx_bound, double beta,
                                 const resolution& res, double tol = 1e-9);

// Same Gram matrix through quaternion_inner, compared against the identity
// times I2.
report_batch quaternionic_orthogonality_check(int idx_bound, double beta,
                                              const resolution& res,
                                              double tol = 1e-8);

// Quadrature reproduction of
//   int_0^inf x^{c-1} e^{-x} 1F1(-m; c; x) 1F1(-n; c; x) dx
//     = Gamma(c) n! / (c)_n  if m == n, else 0,
// for all m, n <= nmax.
report_batch confluent_orthogonality_check(double c, int nmax, int npts,
                                           double tol = 1e-10);

}  // namespace lag2d
