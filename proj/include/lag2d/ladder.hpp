#pragma once

#include <json.hpp>

#include "lag2d/bipoly.hpp"
#include "lag2d/construct2d.hpp"
#include "lag2d/quadrature.hpp"
#include "lag2d/rational.hpp"
#include "lag2d/report.hpp"

namespace lag2d {

// Index-shift operators on the bivariate family.  Lowercase kinds act on the
// m >= n branch, the uppercase mirrors on the n >= m branch (roles of w and
// wbar swapped), and the b-kinds are the quaternionic operators, formally
// identical to their lowercase counterparts with (w, wbar) read as (q, qbar).
enum class ladder_kind {
  a1, a1_dag, a2, a2_dag,
  A1, A1_dag, A2, A2_dag,
  b1, b1_dag, b2, b2_dag,
};

const char* ladder_kind_name(ladder_kind k);

struct ladder_op {
  ladder_kind kind = ladder_kind::a1;
  double beta = 0.0;
};

// Formal application on (possibly Laurent) polynomials:
//   a1      beta shift(-1,0) + d/dw           (beta/w + d/dw)
//   a1_dag  shift(1,0) - d/dwbar              (w - d/dwbar)
//   a2      -d/dwbar
//   a2_dag  beta shift(-1,0) + d/dw - shift(0,1)
// Uppercase kinds swap w and wbar throughout; b-kinds alias the lowercase
// formulas.
template <class C>
bi_poly<C> apply_ladder(ladder_kind k, const C& beta, const bi_poly<C>& p) {
  switch (k) {
    case ladder_kind::a1:
    case ladder_kind::b1:
      return p.shifted(-1, 0).scaled(beta) + p.d_dw();
    case ladder_kind::a1_dag:
    case ladder_kind::b1_dag:
      return p.shifted(1, 0) - p.d_dwbar();
    case ladder_kind::a2:
    case ladder_kind::b2:
      return -p.d_dwbar();
    case ladder_kind::a2_dag:
    case ladder_kind::b2_dag:
      return p.shifted(-1, 0).scaled(beta) + p.d_dw() - p.shifted(0, 1);
    case ladder_kind::A1:
      return p.shifted(0, -1).scaled(beta) + p.d_dwbar();
    case ladder_kind::A1_dag:
      return p.shifted(0, 1) - p.d_dw();
    case ladder_kind::A2:
      return -p.d_dw();
    case ladder_kind::A2_dag:
      return p.shifted(0, -1).scaled(beta) + p.d_dwbar() - p.shifted(1, 0);
  }
  return {};
}

poly apply(const ladder_op& op, const poly& p);

// Index-shift actions of every kind on Z_{m,n}, checked at the coefficient
// level.  In the strict regime (m > n for a1/a2_dag and the b aliases, n > m
// for A1/A2_dag) and the closed regime (m >= n for a1_dag/a2, n >= m for
// A1_dag/A2) the stated actions hold; on the m = n diagonal a1/a2_dag (and
// mirrors) deviate, and those rows carry the measured deviation with status
// boundary-deviation.  Exact mode demands literal zero residuals.
report_batch check_ladder_complex(int mmax, double beta);
report_batch check_ladder_complex_exact(int mmax, const rational& beta);

// Commutator actions [a1,a2] = 0, [a1,a1_dag] = [a2,a2_dag] = id,
// [a1,a2_dag] = [a2,a1_dag] = 0, applied as function compositions to each
// Z_{m,n} with m > n+1, m <= mmax.
report_batch check_commutators(int mmax, double beta);
report_batch check_commutators_exact(int mmax, const rational& beta);

// First-order differential relations linking Z_{m,n} to neighbors:
//   w d/dw Z        = (m-n) Z - wbar Z_{m,n-1}
//   w d/dw Z        = m Z - (beta+m) Z_{m-1,n-1}
//   wbar d/dwbar Z  = -wbar Z_{m,n-1}
//   wbar d/dwbar Z  = n Z - (beta+m) Z_{m-1,n-1}
//   (w d/dw - wbar d/dwbar) Z          = (m-n) Z
//   (n w d/dw - m wbar d/dwbar) Z      = (m-n)(beta+m) Z_{m-1,n-1}
// Checked for m >= n >= 1 (relations referencing n-1), the grading relation
// additionally on every pair m, n <= mmax.
report_batch check_diff_recurrences(int mmax, double beta);
report_batch check_diff_recurrences_exact(int mmax, const rational& beta);

// Quaternionic operator actions.  Formal layer: the b-kind identities are the
// same polynomial computations as the lowercase ones.  Numeric layer: both
// sides of each valid identity evaluated at random quaternions, componentwise
// agreement within 1e-11 scaled.
report_batch check_ladder_quaternionic(int mmax, double beta, int samples,
                                       unsigned seed);

// Quadrature verification that a1_dag (resp. a2_dag) is the inner-product
// adjoint of a1 (resp. a2): <a1 p, q> = <p, a1_dag q> on family pairs whose
// images stay polynomial.  Deviations are scaled by 1 + max(|lhs|, |rhs|).
report_batch check_adjointness(int mmax, double beta, const resolution& res,
                               double tol = 1e-9);

// Flat rows {identity, indices, beta, residual, status} for every report in
// the batch.
nlohmann::json ladder_reports_json(const report_batch& b);

}  // namespace lag2d
