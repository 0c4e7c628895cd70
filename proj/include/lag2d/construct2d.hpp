#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "lag2d/bipoly.hpp"
#include "lag2d/report.hpp"

namespace lag2d {

// Index pair of the bivariate family Z_{m,n}.  Degree in w is max over terms
// of the w exponent; the conjugation symmetry swaps the two slots.
struct z_index {
  int m = 0;
  int n = 0;
  auto operator<=>(const z_index&) const = default;
};

// Coefficient map of Z_{m,n}^{(beta)}: for m >= n,
//   sum_{k=0}^{n} (-1)^{n-k} (beta+m-k+1)_k / (k! (n-k)!) w^{m-k} wbar^{n-k},
// and the exponent-swapped polynomial for m < n.  Exact in the coefficient
// field; the double overload rounds each exact rational coefficient once.
rpoly z_poly_rational(int m, int n, const rational& beta);
poly z_poly(int m, int n, double beta);

// Overload set used by code templated on the coefficient type.
inline poly z_poly_c(int m, int n, double beta) { return z_poly(m, n, beta); }
inline rpoly z_poly_c(int m, int n, const rational& beta) {
  return z_poly_rational(m, n, beta);
}

// Squared norm of Z_{m,n}^{(beta)} under the weight r^{2 beta} e^{-r^2} r dr dtheta / pi:
// Gamma(beta + max(m,n) + 1) / min(m,n)!.
double norm_constant(int m, int n, double beta);

// A 1D orthogonal polynomial family presented through its monomial
// coefficients: coeff(n, alpha, j) is the coefficient of x^{n-j} in
// phi_n(x; alpha), and norm(n, alpha) its squared norm against the family
// weight.  coeff(n, alpha, 0) must be nonzero (phi_n has exact degree n).
struct family1d {
  std::string name;
  std::function<double(int n, double alpha, int j)> coeff;
  std::function<double(int n, double alpha)> norm;
};

// Laguerre instance: phi_n(x; alpha) = L_n^{(alpha)}(x) with weight
// x^alpha e^{-x}, squared norm Gamma(n + alpha + 1) / n!.
const family1d& laguerre_family();

// Bivariate polynomial z^{m-n} phi_n(z zbar; m-n+beta) for m >= n, and its
// exponent swap otherwise.  With the Laguerre family this reproduces z_poly
// coefficient for coefficient.
poly build_f(const family1d& fam, int m, int n, double beta);

// Evaluation through the confluent hypergeometric representation
//   Z_{m,n} = ((beta+m-n+1)_n / n!) z^{m-n} 1F1(-n; beta+m-n+1; z zbar)
// for m >= n, conjugated otherwise.  Independent of the monomial evaluator.
cplx z_eval_1f1(int m, int n, double beta, cplx z);

// Single-formula evaluation with mn = min(m,n) handled by integer min/max:
//   ((beta+|m-n|+1)_mn / mn!) z^{max(m-n,0)} zbar^{max(n-m,0)}
//     * 1F1(-mn; beta+|m-n|+1; z zbar).
cplx z_eval_combined(int m, int n, double beta, cplx z);

// Rows "m,n,beta,a,b,coeff" for every term of Z_{m,n}^{(beta)}, sorted by
// exponent pair.
void write_coeff_csv(std::ostream& os, int m, int n, double beta);

// Contiguous-index recurrences satisfied by the family, checked at the
// coefficient level for one index pair:
//   raise_m_shift_beta:   Z_{m+1,n}^{(beta)} = w Z_{m,n}^{(beta+1)}          (m >= n)
//   split_lower_m:        Z_{m,n} = Z_{m-1,n-1} + w Z_{m-1,n}                (m >= n+1)
//   three_term:           (beta+m) Z_{m-1,n} = (n+1) Z_{m,n+1} + wbar Z_{m,n} (m >= n+1)
//   weighted_three_term:  (beta+m) w Z_{m-1,n} = (beta+m-n) Z_{m,n} - wbar Z_{m,n-1}
//                                                                  (m >= n+1, n >= 1)
// At m == n the last three relations break down; the check reports the
// measured deviation there instead of a pass.
report_batch z_recurrences_check(z_index idx, double beta);
report_batch z_recurrences_check_exact(z_index idx, const rational& beta);

}  // namespace lag2d
