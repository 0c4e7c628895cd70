#pragma once

#include <json.hpp>

#include <complex>
#include <iosfwd>
#include <vector>

#include "lag2d/bipoly.hpp"
#include "lag2d/construct2d.hpp"
#include "lag2d/hypergeom.hpp"
#include "lag2d/quadrature.hpp"
#include "lag2d/report.hpp"

namespace lag2d {

// Diagnostics of an adaptively truncated series.
struct truncation_info {
  int terms = 0;          // number of summands accumulated
  double last_term = 0.0; // magnitude of the final summand
  bool converged = false; // stopping rule met before the hard cap
};

// Closed form of the diagonal square sum
//   E_n^(beta)(x) = (1+beta)_n / (n! Gamma(beta+1)) *
//     sum_{k,k'=0..n} (-n)_k (-n)_{k'} / (k! k'! (1+beta)_k (1+beta)_{k'})
//       * x^{k+k'} * 2F2(1, beta+n+1; beta+k+1, beta+k'+1; x),
// the stated value of sum_{m>=n} |Z_{m,n}|^2 n! / Gamma(beta+m+1) at x = z zbar.
double e_sum_closed(int n, double beta, double x, const series_control& ctl = {});

// Partial sum of |Z_{m,n}(z)|^2 n! / Gamma(beta+m+1) for m = n..M, evaluated
// through the confluent-hypergeometric path.  Nondecreasing in M.
double e_sum_bruteforce(int n, double beta, cplx z, int M);

// Same sum, truncated where the next term drops below 1e-15 of the running
// total (hard cap 500 terms past the start).
double e_sum_auto(int n, double beta, cplx z, truncation_info* info = nullptr);

// Closed form against the auto-truncated sum at `samples` random points with
// |z| <= 2, one row per (n, beta) plus the unit-circle anchor e at
// n = 0, beta = 0.  The fitted closed/bruteforce ratio is attached to each
// row so a systematic constant offset would be visible in the report.
report_batch check_sums(const std::vector<int>& ns,
                        const std::vector<double>& betas, int samples,
                        unsigned seed, double tol = 1e-8);

// The band-indexed variant as printed: sum_s |Z_{s+n,s}(z)|^2 s! /
// Gamma(beta+s+n+1), claimed to equal e_sum_closed(n, ...).  The summands
// decay like s^{-1/2} for z != 0 (and grow for z = 0), so the printed claim
// fails; the check accumulates up to M terms, records the partial sum, the
// closed value and the convergence flag, and reports the mismatch as a
// boundary deviation rather than a failure.
report_batch check_shifted_sum(int n, double beta, cplx z, int M = 500);

// Printed closed forms of the weighted moments
//   int f(z) Z_{m,n} conj(Z_{t,s}) dnu
// for f in {one, z, zbar, zsq_abs, theta}; the Kronecker selection factors
// (delta_{m-n,t-s}, delta_{m-n+1,t-s}, delta_{m-n-1,t-s}, delta_{n,s}
// delta_{m,t}) are evaluated first, so out-of-selection tuples return 0
// without touching the hypergeometric factors.  Requires m >= n, t >= s.
double moment_closed(moment_tag f, int m, int n, int t, int s, double beta);

// Diagonal theta moment after Pochhammer simplification: pi Gamma(beta+m+1)/n!.
double theta_moment_diag_simplified(int m, int n, double beta);

// Quadrature vs closed form over all tuples n <= m <= mmax, s <= t <= mmax.
// Nonzero closed values are compared at 1e-9 scaled by 1 + |closed|; zeros
// from the index-shift selection factor are exact under the mode-resolved
// rule and held to 1e-12 absolute; zeros that arise from radial cancellation
// (theta within a stratum, or a selected tuple whose hypergeometric factor
// vanishes) are held to 1e-9 scaled by the integrand size.  For f = theta
// only the same-stratum tuples (m - n == t - s) are swept here; see
// check_theta_cross_stratum.
report_batch check_moments(moment_tag f, int mmax, double beta,
                           const resolution& res);

// Theta moments across strata (m - n != t - s), where the printed closed form
// says 0 but the angular integral of theta e^{ik theta} does not vanish.
// Nonzero quadrature values are reported as boundary deviations with the
// measured value attached.
report_batch check_theta_cross_stratum(int mmax, double beta,
                                       const resolution& res);

// Quaternionic moment identities on the diagonal (A = B = (m,n)): the
// |q|^2 moment equals the complex zsq_abs moment times I2, and the q / qbar
// moments equal the average of the z and zbar diagonal moments (both zero by
// angular selection) times I2.
report_batch check_quaternion_moments(int mmax, double beta,
                                      const resolution& res,
                                      double tol = 1e-6);

// Quaternionic square sum: sum_m Z(q,qbar) conj(Z(q,qbar)) / C evaluated by
// the slice representation collapses to the scalar e_sum at x = |q|^2; checked
// at random quaternions against e_sum_closed.
report_batch check_quaternion_sum(int n, double beta, int samples,
                                  unsigned seed, double tol = 1e-8);

// Truncation order for the kernel sum at a given evaluation point, with a
// geometric tail estimate.
struct kernel_truncation {
  int n = 0;
  double beta = 0.0;
  int M = 0;               // sum runs over m = n..M
  double tail_bound = 0.0;
};

kernel_truncation auto_truncation(int n, double beta, cplx z);

// Truncated diagonal kernel K_n^beta(z, zbar) = sum_{m=n}^{M} |Z_{m,n}|^2 n!
// / Gamma(beta+m+1); positive, and e^{|z|^2} at n = 0, beta = 0 up to the
// tail bound.
double kernel(const kernel_truncation& trunc, cplx z);

// Unit coefficient vector c_i = conj(Z_{n+i,n}(z)) / sqrt(C(n+i,n,beta) * K),
// i = 0..M-n.  Requires kernel(trunc, z) > 0.
std::vector<cplx> cs_vector(const kernel_truncation& trunc, cplx z);

// Dense row-major complex matrix.
struct cmatrix {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> data;

  cmatrix() = default;
  cmatrix(int r, int c) : rows(r), cols(c), data(std::size_t(r) * c) {}
  cplx& at(int i, int j) { return data[std::size_t(i) * cols + j]; }
  const cplx& at(int i, int j) const { return data[std::size_t(i) * cols + j]; }
};

cmatrix mat_mul(const cmatrix& a, const cmatrix& b);
cmatrix mat_adjoint(const cmatrix& a);
double mat_max_abs_diff(const cmatrix& a, const cmatrix& b);

// Truncated operator of the multiplier f on the orthonormal family
// Phi_i = Z_{n+i,n} / sqrt(C(n+i,n,beta)), i = 0..M-n:
//   (A_f)_{ij} = int f Phi_i conj(Phi_j) dnu.
// With the holomorphic member in the first slot, A_z is the one-sided shift
// with superdiagonal sqrt(beta+n+i+1) (the standard lowering convention) and
// A_zbar is its adjoint.
cmatrix quantize(moment_tag f, int n, double beta, int M,
                 const resolution& res = {});

// Structure checks on the quantized matrices: A_zbar = adjoint(A_z),
// [A_z, A_zbar] = I away from the truncation edge, Hermiticity of the
// zsq_abs and theta matrices, and the n = 0, beta = 0 anchors
// (superdiagonal sqrt(i+1), zsq_abs diagonal i+1, theta diagonal pi).
report_batch check_quantize(int n, double beta, int M,
                            const resolution& res = {});

// Rows "row,col,re,im".
void write_matrix_csv(std::ostream& os, const cmatrix& m);
nlohmann::json matrix_to_json(const cmatrix& m);

}  // namespace lag2d
