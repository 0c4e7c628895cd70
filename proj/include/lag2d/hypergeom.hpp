#pragma once

#include <stdexcept>

namespace lag2d {

// Truncation policy for the one non-terminating series in the library (2F2).
// Terminating sums ignore it.
struct series_control {
  int max_terms = 10000;
  double rel_tol = 1e-14;

  void validate() const {
    if (max_terms < 1) throw std::invalid_argument("series_control: max_terms < 1");
    if (!(rel_tol > 0.0) || !(rel_tol < 1.0))
      throw std::invalid_argument("series_control: rel_tol outside (0,1)");
  }
};

// Compensated (Kahan) accumulator.  All series below sum in ascending index
// order through this, which keeps termwise cancellation reproducible.
class kahan {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Rising factorial (a)_k computed by direct product.  Negative real a is
// allowed; an exact zero factor yields 0.  Overflow is not trapped, the
// result is simply non-finite and callers treat that as a flagged status.
double pochhammer(double a, unsigned k);

// 1F1(-n; c; x), a degree-n polynomial in x.  Requires (c)_k != 0 for k<=n.
double hyp1f1_terminating(unsigned n, double c, double x);

// 2F0(-n, b; ; x), a degree-n polynomial in x.  No denominator parameters.
double hyp2f0_terminating(unsigned n, double b, double x);

// 2F2(a1, a2; c1, c2; x) summed until |term| < rel_tol * |partial sum| or
// max_terms is hit (the latter raises no_convergence).  If terms_used is
// non-null it receives the number of terms summed.
double hyp2f2(double a1, double a2, double c1, double c2, double x,
              const series_control& ctl = series_control{},
              int* terms_used = nullptr);

// Appell F2(a; -n, -s; c1, c2; 1, 1): a finite double sum over
// 0<=j<=n, 0<=k<=s of (a)_{j+k} (-n)_j (-s)_k / ((c1)_j (c2)_k j! k!).
double appell_f2_terminating(double a, unsigned n, unsigned s, double c1,
                             double c2);

// Generalized Laguerre polynomial L_n^{(a)}(x) via its finite series.
// Requires a not in {-1, ..., -n} so every denominator Pochhammer is nonzero.
double laguerre(unsigned n, double a, double x);

}  // namespace lag2d
