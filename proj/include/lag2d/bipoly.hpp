#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "lag2d/error.hpp"
#include "lag2d/rational.hpp"

namespace lag2d {

using cplx = std::complex<double>;

// Sparse bivariate Laurent polynomial sum_{a,b} c_{ab} w^a wbar^b in the two
// commuting formal variables (w, wbar).  Exponents may be negative; only
// exactly-zero coefficients are pruned, so floating point noise is never
// silently dropped.  The term map is ordered, which makes iteration,
// serialization and evaluation deterministic.
template <class C>
class bi_poly {
 public:
  using key = std::pair<int, int>;
  using term_map = std::map<key, C>;

  bi_poly() = default;

  static bi_poly monomial(int a, int b, const C& c) {
    bi_poly p;
    if (!is_zero(c)) p.terms_[{a, b}] = c;
    return p;
  }
  static bi_poly constant(const C& c) { return monomial(0, 0, c); }

  const term_map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(int a, int b, const C& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  bi_poly& operator+=(const bi_poly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  bi_poly& operator-=(const bi_poly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, C(-c));
    return *this;
  }
  friend bi_poly operator+(bi_poly a, const bi_poly& b) { return a += b; }
  friend bi_poly operator-(bi_poly a, const bi_poly& b) { return a -= b; }
  bi_poly operator-() const {
    bi_poly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = C(-c);
    return r;
  }

  friend bi_poly operator*(const bi_poly& a, const bi_poly& b) {
    bi_poly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, C(ca * cb));
    return r;
  }

  bi_poly scaled(const C& s) const {
    bi_poly r;
    if (is_zero(s)) return r;
    for (const auto& [k, c] : terms_) r.terms_[k] = C(c * s);
    return r;
  }

  // Multiply by w^da wbar^db (da, db may be negative).
  bi_poly shifted(int da, int db) const {
    bi_poly r;
    for (const auto& [k, c] : terms_) r.terms_[{k.first + da, k.second + db}] = c;
    return r;
  }

  // Exponent swap (a,b) -> (b,a).  For real coefficients this realizes
  // complex conjugation of the represented function: p(w,wbar) evaluated at
  // (zbar, z) equals conj(p(z, zbar)).
  bi_poly conjugate() const {
    bi_poly r;
    for (const auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
    return r;
  }

  bi_poly d_dw() const {
    bi_poly r;
    for (const auto& [k, c] : terms_) {
      if (k.first == 0) continue;
      r.add_term(k.first - 1, k.second, C(c * C(k.first)));
    }
    return r;
  }

  bi_poly d_dwbar() const {
    bi_poly r;
    for (const auto& [k, c] : terms_) {
      if (k.second == 0) continue;
      r.add_term(k.first, k.second - 1, C(c * C(k.second)));
    }
    return r;
  }

  bool operator==(const bi_poly& o) const { return terms_ == o.terms_; }

  int min_exponent() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::min({m, k.first, k.second});
    return m;
  }
  bool has_negative_exponents() const { return min_exponent() < 0; }

  int max_abs_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_)
      d = std::max(d, std::abs(k.first) + std::abs(k.second));
    return d;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::fabs(to_double(c)));
    return m;
  }

 private:
  term_map terms_;
};

using poly = bi_poly<double>;
using rpoly = bi_poly<rational>;

inline poly to_double_poly(const rpoly& p) {
  poly r;
  for (const auto& [k, c] : p.terms()) r.add_term(k.first, k.second, to_double(c));
  return r;
}

// Evaluate with the substitution w = z, wbar = conj(z).  Negative exponents
// require z != 0.
inline cplx eval_complex(const poly& p, cplx z) {
  if (z == cplx(0.0, 0.0) && p.has_negative_exponents())
    throw error(errc::pole_at_zero, "Laurent term evaluated at z = 0");
  int lo = p.min_exponent();
  int hi = 0;
  for (const auto& [k, c] : p.terms()) hi = std::max({hi, k.first, k.second});
  // power table for z and conj(z), indices lo..hi
  std::vector<cplx> zp(hi - lo + 1), zbp(hi - lo + 1);
  cplx zb = std::conj(z);
  cplx zinv = (lo < 0) ? cplx(1.0, 0.0) / z : cplx(0.0, 0.0);
  cplx zbinv = (lo < 0) ? cplx(1.0, 0.0) / zb : cplx(0.0, 0.0);
  zp[-lo] = zbp[-lo] = cplx(1.0, 0.0);
  for (int e = 1; e <= hi; ++e) {
    zp[e - lo] = zp[e - 1 - lo] * z;
    zbp[e - lo] = zbp[e - 1 - lo] * zb;
  }
  for (int e = -1; e >= lo; --e) {
    zp[e - lo] = zp[e + 1 - lo] * zinv;
    zbp[e - lo] = zbp[e + 1 - lo] * zbinv;
  }
  cplx acc(0.0, 0.0);
  for (const auto& [k, c] : p.terms()) acc += c * zp[k.first - lo] * zbp[k.second - lo];
  return acc;
}

}  // namespace lag2d
