#include <doctest.h>

#include <cmath>

#include "lag2d/error.hpp"
#include "lag2d/hypergeom.hpp"
#include "lag2d/rational.hpp"

using namespace lag2d;

TEST_SUITE("hypergeom") {

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(3.0, 4) == 360.0);
  CHECK(pochhammer(7.25, 0) == 1.0);
  CHECK(pochhammer(-3.0, 4) == 0.0);  // hits the zero factor
  CHECK(pochhammer(-2.5, 2) == doctest::Approx(3.75).epsilon(1e-15));
}

TEST_CASE("pochhammer matches exact rational products") {
  for (double a : {-3.0, -1.5, 0.5, 2.0}) {
    for (unsigned k = 0; k <= 12; ++k) {
      const double exact = to_double(rational_pochhammer(rat_from_double(a), k));
      CHECK(pochhammer(a, k) ==
            doctest::Approx(exact).epsilon(1e-14).scale(1.0 + std::fabs(exact)));
    }
  }
}

TEST_CASE("kahan accumulator carries sub-ulp summands forward") {
  // Naive addition loses both small terms (1 + 2^-53 rounds back to 1);
  // the compensation combines them into the representable 1 + 2^-52.
  const double tiny = std::ldexp(1.0, -53);
  kahan acc;
  acc.add(1.0);
  acc.add(tiny);
  acc.add(tiny);
  CHECK(acc.value() == 1.0 + std::ldexp(1.0, -52));
  CHECK(1.0 + tiny + tiny == 1.0);
}

TEST_CASE("terminating 1F1 values") {
  CHECK(hyp1f1_terminating(0, 3.0, 9.9) == 1.0);
  CHECK(hyp1f1_terminating(1, 2.0, 0.6) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(hyp1f1_terminating(2, 2.0, 1.0) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("terminating 1F1 rejects vanishing denominators") {
  CHECK_THROWS_AS(hyp1f1_terminating(2, -1.0, 1.0), const error&);
}

TEST_CASE("terminating 2F0 values") {
  CHECK(hyp2f0_terminating(1, 2.0, 0.25) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(hyp2f0_terminating(2, 1.5, 0.1) ==
        doctest::Approx(0.7375).epsilon(1e-14));
}

TEST_CASE("2F2 with matching parameters is the exponential") {
  CHECK(hyp2f2(1.0, 2.0, 1.0, 2.0, 1.0) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-13));
  int used = 0;
  CHECK(hyp2f2(1.0, 2.0, 1.0, 2.0, -0.3, {}, &used) ==
        doctest::Approx(std::exp(-0.3)).epsilon(1e-13));
  CHECK(used > 1);
}

TEST_CASE("2F2 reduces to 1F1 when one pair cancels") {
  // 2F2(1, 5; 2, 5; x) = 1F1(1; 2; x) = (e^x - 1)/x
  const double x = 0.7;
  CHECK(hyp2f2(1.0, 5.0, 2.0, 5.0, x) ==
        doctest::Approx((std::exp(x) - 1.0) / x).epsilon(1e-13));
  // A negative integer numerator parameter terminates the series.
  CHECK(hyp2f2(-2.0, 3.0, 2.0, 3.0, 1.3) ==
        doctest::Approx(hyp1f1_terminating(2, 2.0, 1.3)).epsilon(1e-13));
}

TEST_CASE("2F2 raises after exhausting the term budget") {
  series_control ctl;
  ctl.max_terms = 10;
  CHECK_THROWS_AS(hyp2f2(1.0, 2.0, 1.0, 2.0, 50.0, ctl), const error&);
}

TEST_CASE("series control validation") {
  series_control bad;
  bad.rel_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), const std::invalid_argument&);
  bad = series_control{};
  bad.max_terms = 0;
  CHECK_THROWS_AS(bad.validate(), const std::invalid_argument&);
}

TEST_CASE("terminating Appell F2 values") {
  CHECK(appell_f2_terminating(4.7, 0, 0, 1.0, 2.0) == 1.0);
  // Single-row case reduces to a 2F1-type sum: 1 - a/c1 at n=1, s=0.
  CHECK(appell_f2_terminating(4.0, 1, 0, 3.0, 9.0) ==
        doctest::Approx(1.0 - 4.0 / 3.0).epsilon(1e-14));
  CHECK(appell_f2_terminating(2.0, 1, 1, 2.0, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // Cancelling column: 1 - 3 + 2.
  CHECK(std::fabs(appell_f2_terminating(3.0, 0, 2, 2.0, 2.0)) < 1e-14);
}

TEST_CASE("Laguerre values") {
  CHECK(laguerre(0, 0.7, 3.0) == 1.0);
  CHECK(laguerre(1, 0.5, 2.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(laguerre(2, 0.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("Laguerre three-term recurrence") {
  for (double a : {0.0, 0.5, 2.5}) {
    for (double x : {0.3, 1.7, 9.2}) {
      for (unsigned n = 1; n <= 20; ++n) {
        const double lm = laguerre(n - 1, a, x);
        const double l = laguerre(n, a, x);
        const double lp = laguerre(n + 1, a, x);
        const double lhs = (n + 1.0) * lp;
        const double rhs = (2.0 * n + a + 1.0 - x) * l - (n + a) * lm;
        // The alternating series cancels at large n * x: its value at -x is
        // the sum of the term magnitudes, which bounds the rounding noise.
        const double cond = laguerre(n + 1, a, -x) +
                            (2.0 * n + a + 1.0 + x) * laguerre(n, a, -x) +
                            (n + a) * laguerre(n - 1, a, -x);
        CHECK(std::fabs(lhs - rhs) <= 1e-13 * (1.0 + cond));
      }
    }
  }
}

TEST_CASE("Laguerre agrees with its 1F1 form") {
  for (double a : {0.0, 2.5}) {
    for (double x : {0.5, 3.2}) {
      for (unsigned n = 0; n <= 12; ++n) {
        double fact = 1.0;
        for (unsigned i = 2; i <= n; ++i) fact *= i;
        const double via_1f1 =
            pochhammer(a + 1.0, n) / fact * hyp1f1_terminating(n, a + 1.0, x);
        const double direct = laguerre(n, a, x);
        CHECK(std::fabs(direct - via_1f1) <=
              1e-12 * (1.0 + std::fabs(direct)));
      }
    }
  }
}

}  // TEST_SUITE
