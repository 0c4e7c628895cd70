#include "lag2d/hypergeom.hpp"

#include <cmath>
#include <cstdlib>

#include "lag2d/error.hpp"

namespace lag2d {

double pochhammer(double a, unsigned k) {
  double p = 1.0;
  for (unsigned i = 0; i < k; ++i) p *= (a + i);
  return p;
}

namespace {

// (c)_k vanishes for some 0 <= k <= kmax iff c is a nonpositive integer with
// c + j == 0 for some j in [0, kmax-1].
bool pochhammer_hits_zero(double c, unsigned kmax) {
  for (unsigned j = 0; j + 1 <= kmax; ++j)
    if (c + static_cast<double>(j) == 0.0) return true;
  return false;
}

}  // namespace

double hyp1f1_terminating(unsigned n, double c, double x) {
  if (pochhammer_hits_zero(c, n))
    throw error(errc::pole_in_denominator, "1F1 lower parameter");
  kahan acc;
  double term = 1.0;
  acc.add(term);
  for (unsigned k = 0; k < n; ++k) {
    double num = static_cast<double>(k) - static_cast<double>(n);  // (-n + k)
    term *= num * x / ((c + k) * (k + 1.0));
    acc.add(term);
  }
  return acc.value();
}

double hyp2f0_terminating(unsigned n, double b, double x) {
  kahan acc;
  double term = 1.0;
  acc.add(term);
  for (unsigned k = 0; k < n; ++k) {
    double num = static_cast<double>(k) - static_cast<double>(n);
    term *= num * (b + k) * x / (k + 1.0);
    acc.add(term);
  }
  return acc.value();
}

double hyp2f2(double a1, double a2, double c1, double c2, double x,
              const series_control& ctl, int* terms_used) {
  ctl.validate();
  kahan acc;
  double term = 1.0;
  acc.add(term);
  int used = 1;
  for (int k = 0; k < ctl.max_terms; ++k) {
    double den = (c1 + k) * (c2 + k);
    if (den == 0.0) throw error(errc::pole_in_denominator, "2F2 lower parameter");
    term *= (a1 + k) * (a2 + k) * x / (den * (k + 1.0));
    acc.add(term);
    ++used;
    if (term == 0.0 || std::fabs(term) < ctl.rel_tol * std::fabs(acc.value())) {
      if (terms_used) *terms_used = used;
      return acc.value();
    }
  }
  throw error(errc::no_convergence, "2F2 truncated at max_terms");
}

double appell_f2_terminating(double a, unsigned n, unsigned s, double c1,
                             double c2) {
  if (pochhammer_hits_zero(c1, n) || pochhammer_hits_zero(c2, s))
    throw error(errc::pole_in_denominator, "Appell F2 lower parameter");
  kahan acc;
  double nn = static_cast<double>(n);
  double ss = static_cast<double>(s);
  double row = 1.0;  // (a)_j (-n)_j / ((c1)_j j!)
  for (unsigned j = 0; j <= n; ++j) {
    double term = row;  // row * (a+j)_k (-s)_k / ((c2)_k k!)
    for (unsigned k = 0; k <= s; ++k) {
      acc.add(term);
      term *= (a + j + k) * (k - ss) / ((c2 + k) * (k + 1.0));
    }
    row *= (a + j) * (j - nn) / ((c1 + j) * (j + 1.0));
  }
  return acc.value();
}

double laguerre(unsigned n, double a, double x) {
  // Denominator zeros occur exactly when a is a negative integer in [-n,-1].
  double r = std::round(a);
  if (r == a && r <= -1.0 && r >= -static_cast<double>(n))
    throw error(errc::pole_in_denominator, "Laguerre order parameter");
  // sum_k (-x)^{n-k} (a+n-k+1)_k / (k! (n-k)!), ascending k.
  kahan acc;
  for (unsigned k = 0; k <= n; ++k) {
    double coeff = pochhammer(a + n - k + 1.0, k);
    double fact = 1.0;
    for (unsigned i = 2; i <= k; ++i) fact *= i;
    for (unsigned i = 2; i <= n - k; ++i) fact *= i;
    double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
    acc.add(sign * std::pow(x, static_cast<double>(n - k)) * coeff / fact);
  }
  return acc.value();
}

}  // namespace lag2d
