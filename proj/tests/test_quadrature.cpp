#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "lag2d/construct2d.hpp"
#include "lag2d/error.hpp"
#include "lag2d/quadrature.hpp"

using namespace lag2d;

TEST_SUITE("quadrature") {

TEST_CASE("one point weighted rule sits at the first moment") {
  const quad_rule_1d r = gauss_laguerre(0.5, 1);
  REQUIRE(r.nodes.size() == 1);
  CHECK(r.nodes[0] == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(r.weights[0] == doctest::Approx(0.8862269254527580).epsilon(1e-13));
}

TEST_CASE("weights sum to the mass of the weight function") {
  for (double alpha : {0.0, 0.5, 1.0, 2.5})
    for (int n : {4, 16, 64}) {
      const quad_rule_1d r = gauss_laguerre(alpha, n);
      const double want = std::tgamma(alpha + 1.0);
      CHECK(std::abs(r.weight_sum() - want) <= 1e-13 * want);
    }
}

TEST_CASE("polynomial moments are exact through the design degree") {
  for (double alpha : {0.0, 2.5})
    for (int n : {8, 64}) {
      const quad_rule_1d r = gauss_laguerre(alpha, n);
      // Running per-node powers keep intermediate magnitudes bounded.
      std::vector<long double> mom(2 * n, 0.0L);
      for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        long double p = r.weights[i];
        for (int j = 0; j < 2 * n; ++j) {
          mom[j] += p;
          p *= r.nodes[i];
        }
      }
      long double want = std::tgamma(alpha + 1.0);
      for (int j = 0; j < 2 * n; ++j) {
        CHECK(std::abs(static_cast<double>(mom[j] / want) - 1.0) <= 1e-12);
        want *= alpha + j + 1.0;
      }
    }
}

TEST_CASE("interval rule integrates even powers") {
  const quad_rule_1d r = gauss_legendre(4);
  double s0 = 0.0, s6 = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    s0 += r.weights[i];
    s6 += r.weights[i] * std::pow(r.nodes[i], 6);
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s6 == doctest::Approx(2.0 / 7.0).epsilon(1e-13));
}

TEST_CASE("plane inner product reproduces the norm constants") {
  const double beta = 0.7;
  const cplx one =
      complex_inner(poly::constant(1.0), poly::constant(1.0), beta, 64, 64);
  CHECK(std::abs(one - cplx(std::tgamma(beta + 1.0), 0.0)) <= 1e-12);

  const poly p = z_poly(2, 1, 0.0);
  const cplx nrm = complex_inner(p, p, 0.0, 64, 64);
  CHECK(std::abs(nrm - cplx(2.0, 0.0)) <= 1e-11);
}

TEST_CASE("angular mode mismatch gives an identically zero inner product") {
  const cplx v = complex_inner(z_poly(2, 0, 0.0), z_poly(1, 1, 0.0), 0.0, 64, 64);
  CHECK(v.real() == 0.0);
  CHECK(v.imag() == 0.0);
}

TEST_CASE("same stratum off diagonal pairs cancel radially") {
  const double beta = 0.5;
  const cplx v = complex_inner(z_poly(3, 2, beta), z_poly(2, 1, beta), beta, 64, 64);
  const double scale =
      std::sqrt(norm_constant(3, 2, beta) * norm_constant(2, 1, beta));
  CHECK(std::abs(v) <= 1e-10 * (1.0 + scale));
}

TEST_CASE("under resolved rules are rejected") {
  // The angular bound applies to the product: a mode-5 integrand against a
  // 4-point circle rule must be rejected even though its integral is zero.
  CHECK_THROWS_AS(complex_inner(z_poly(5, 0, 0.0), poly::constant(1.0), 0.0,
                                16, 4),
                  const error&);
  CHECK_THROWS_AS(complex_inner(z_poly(2, 2, 0.0), z_poly(2, 2, 0.0), 0.0, 1, 16),
                  const error&);
  CHECK_THROWS_AS(complex_inner(poly::monomial(-1, 0, 1.0), poly::constant(1.0),
                                0.0, 64, 64),
                  const error&);
}

TEST_CASE("grid evaluation agrees with the mode resolved path") {
  const double beta = 1.5;
  const std::pair<z_index, z_index> pairs[] = {
      {{0, 0}, {0, 0}}, {{2, 1}, {2, 1}}, {{3, 1}, {3, 1}}, {{2, 0}, {2, 0}},
  };
  for (const auto& pr : pairs) {
    const poly a = z_poly(pr.first.m, pr.first.n, beta);
    const poly b = z_poly(pr.second.m, pr.second.n, beta);
    const cplx mode = complex_inner(a, b, beta, 24, 16);
    const cplx grid = complex_inner_grid(a, b, beta, 24, 16);
    CHECK(std::abs(grid - mode) <= 1e-9 * (1.0 + std::abs(mode)));
  }
}

TEST_CASE("weighted moments against low members") {
  const poly z10 = z_poly(1, 0, 0.0), z20 = z_poly(2, 0, 0.0);
  const cplx e = moment_inner(moment_tag::z, z10, z20, 0.0, 64, 64);
  CHECK(std::abs(e - cplx(2.0, 0.0)) <= 1e-10);

  const poly z21 = z_poly(2, 1, 0.0), z11 = z_poly(1, 1, 0.0);
  const cplx f = moment_inner(moment_tag::zbar, z21, z11, 0.0, 64, 64);
  CHECK(std::abs(f - cplx(2.0, 0.0)) <= 1e-10);

  const double beta = 0.5;
  const poly one = poly::constant(1.0);
  const cplx g = moment_inner(moment_tag::zsq_abs, one, one, beta, 64, 64);
  CHECK(std::abs(g - cplx(std::tgamma(beta + 2.0), 0.0)) <= 1e-11);
}

TEST_CASE("angle weighted diagonal stays real and scales with the norm") {
  const poly z21 = z_poly(2, 1, 0.0);
  const cplx t = moment_inner(moment_tag::theta, z21, z21, 0.0, 64, 64);
  CHECK(std::abs(t - cplx(2.0 * M_PI, 0.0)) <= 1e-12 * 2.0 * M_PI);
}

TEST_CASE("angle weighted stratum mixing pair is purely imaginary") {
  const poly z10 = z_poly(1, 0, 0.0), z00 = z_poly(0, 0, 0.0);
  const cplx t = moment_inner(moment_tag::theta, z10, z00, 0.0, 64, 64);
  CHECK(std::abs(t.real()) <= 1e-12);
  CHECK(t.imag() == doctest::Approx(-0.8862269254527580).epsilon(1e-10));
}

TEST_CASE("quaternionic inner product is a scalar matrix on the diagonal") {
  const mat2c g = quaternion_inner({2, 1}, {2, 1}, qmoment_tag::one, 0.0, {});
  const mat2c want = mat2c::identity().scaled(cplx(2.0, 0.0));
  CHECK(max_abs_diff(g, want) <= 1e-10 * 2.0);
}

TEST_CASE("full grid quaternionic integration matches the slice shortcut") {
  const resolution res{12, 12, 6, 6};
  const mat2c a = quaternion_inner({2, 1}, {2, 1}, qmoment_tag::zsq_abs, 0.0, res);
  const mat2c b =
      quaternion_inner_grid({2, 1}, {2, 1}, qmoment_tag::zsq_abs, 0.0, res);
  CHECK(max_abs_diff(a, b) <= 1e-9 * (1.0 + a.max_abs()));
}

TEST_CASE("one dimensional confluent orthogonality sweep passes") {
  CHECK(confluent_orthogonality_check(1.5, 8, 64).all_pass());
  CHECK(confluent_orthogonality_check(1.0, 8, 64).all_pass());
}

}  // TEST_SUITE
