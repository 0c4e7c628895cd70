#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>

namespace lag2d {

// Exact coefficient type for the rational shadow mode.  Every IEEE double is a
// dyadic rational, so lifting a double parameter into rational is lossless.
using rational = mpq_class;

inline rational rat(long num, long den = 1) {
  rational r(num, den);
  r.canonicalize();
  return r;
}

inline rational rat_from_double(double x) {
  return rational(x);  // exact dyadic conversion
}

// mpq_get_d truncates toward zero.  Adding the exactly computed residual and
// letting the final IEEE addition round once yields the nearest double (ties
// to even); without the correction results can sit 1 ulp low.
inline double to_double(const rational& r) {
  const double t = r.get_d();
  if (!std::isfinite(t)) return t;
  const double c = rational(r - rat_from_double(t)).get_d();
  return t + c;
}
inline double to_double(double x) { return x; }

inline bool is_zero(const rational& r) { return sgn(r) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline rational rational_factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return rational(f);
}

// Rising factorial (a)_k with exact arithmetic.
inline rational rational_pochhammer(rational a, unsigned k) {
  rational p = 1;
  for (unsigned i = 0; i < k; ++i) {
    p *= a;
    a += 1;
  }
  return p;
}

inline std::string to_string(const rational& r) { return r.get_str(); }

}  // namespace lag2d
