#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "lag2d/construct2d.hpp"
#include "lag2d/error.hpp"
#include "lag2d/quaternion.hpp"

using namespace lag2d;

namespace {

const std::vector<quaternion> kSamples = {
    {1.0, 0.0, 0.0, 0.0},   {0.0, 1.0, 0.0, 0.0},  {0.3, -0.7, 1.1, 0.2},
    {-0.9, 0.4, -0.2, 1.3}, {2.0, 0.5, -1.5, 0.1},
};

}  // namespace

TEST_SUITE("quaternion") {

TEST_CASE("multiplication follows the i j k table") {
  const quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(approx_equal(i * j, k, 0.0));
  CHECK(approx_equal(j * i, quaternion{0, 0, 0, -1}, 0.0));
  CHECK(approx_equal(i * i, quaternion{-1, 0, 0, 0}, 0.0));
  CHECK(approx_equal(j * j, quaternion{-1, 0, 0, 0}, 0.0));
  CHECK(approx_equal(k * k, quaternion{-1, 0, 0, 0}, 0.0));
}

TEST_CASE("conjugation reverses products and norms multiply") {
  for (const auto& p : kSamples)
    for (const auto& q : kSamples) {
      CHECK(approx_equal((p * q).conj(), q.conj() * p.conj(), 1e-13));
      CHECK(std::abs((p * q).norm_sq() - p.norm_sq() * q.norm_sq()) <=
            1e-13 * (1.0 + p.norm_sq() * q.norm_sq()));
    }
}

TEST_CASE("matrix embedding is an algebra homomorphism") {
  for (const auto& p : kSamples)
    for (const auto& q : kSamples) {
      const mat2c lhs = to_matrix(p * q);
      const mat2c rhs = to_matrix(p) * to_matrix(q);
      CHECK(max_abs_diff(lhs, rhs) <= 1e-13 * (1.0 + lhs.max_abs()));
    }
}

TEST_CASE("matrix embedding round trips") {
  for (const auto& q : kSamples)
    CHECK(approx_equal(from_matrix(to_matrix(q)), q, 1e-12));
}

TEST_CASE("matrices off the embedded pattern are rejected") {
  mat2c bad;
  bad.m00 = {1, 0};
  bad.m01 = {2, 0};
  bad.m10 = {3, 0};
  bad.m11 = {4, 0};
  CHECK_THROWS_AS(from_matrix(bad), const error&);
}

TEST_CASE("polar factorization reconstructs the matrix form") {
  for (const auto& q : kSamples) {
    const polar_factors pf = polar_factorize(q);
    const mat2c u = axis_unitary(pf.phi, pf.psi);
    const cplx z = pf.z_slice();
    const mat2c rebuilt = u * mat2c::diag(z, std::conj(z)) * u.adjoint();
    CHECK(max_abs_diff(rebuilt, to_matrix(q)) <= 1e-13 * (1.0 + q.norm()));
  }
}

TEST_CASE("polar factorization of the first imaginary unit") {
  const polar_factors pf = polar_factorize({0, 1, 0, 0});
  CHECK(pf.r == doctest::Approx(1.0));
  CHECK(pf.theta == doctest::Approx(M_PI / 2));
  CHECK(pf.phi == doctest::Approx(M_PI / 2));
}

TEST_CASE("axis degenerate inputs are flagged but still reconstruct") {
  // Imaginary part along the third unit leaves psi undefined; a purely real
  // quaternion leaves the whole axis undefined.  Both reconstruct anyway.
  for (const quaternion& q :
       {quaternion{0.5, 0.0, 0.0, 0.8}, quaternion{0.7, 0.0, 0.0, 0.0}}) {
    const polar_factors pf = polar_factorize(q);
    CHECK(pf.degenerate);
    const mat2c u = axis_unitary(pf.phi, pf.psi);
    const cplx z = pf.z_slice();
    const mat2c rebuilt = u * mat2c::diag(z, std::conj(z)) * u.adjoint();
    CHECK(max_abs_diff(rebuilt, to_matrix(q)) <= 1e-13);
  }
}

TEST_CASE("group average rule has unit mass and kills odd modes") {
  const su2_rule rule = su2_quadrature(16, 16);
  double mass = 0.0, cos_psi = 0.0, cos_half_sq = 0.0;
  for (const auto& nd : rule.nodes) {
    mass += nd.weight;
    cos_psi += nd.weight * std::cos(nd.psi);
    const double c = std::cos(nd.phi / 2);
    cos_half_sq += nd.weight * c * c;
  }
  CHECK(std::abs(mass - 1.0) <= 1e-14);
  CHECK(std::abs(cos_psi) <= 1e-13);
  CHECK(std::abs(cos_half_sq - 0.5) <= 1e-13);
}

TEST_CASE("slice evaluation of the quadratic invariant member") {
  const double beta = 0.8;
  for (const auto& q : kSamples) {
    const quaternion got = sandwich_eval({1, 1}, beta, q);
    const quaternion want{beta + 1.0 - q.norm_sq(), 0.0, 0.0, 0.0};
    CHECK(approx_equal(got, want, 1e-12 * (1.0 + q.norm_sq())));
  }
}

TEST_CASE("monomial evaluation cubes a quaternion") {
  const quaternion q{1, 1, 0, 0};
  const quaternion got = eval_quaternion(z_poly(3, 0, 0.0), q);
  CHECK(approx_equal(got, quaternion{-2, 2, 0, 0}, 1e-13));
}

TEST_CASE("both evaluation paths agree on random inputs") {
  const report_batch b = dual_path_check(4, {0.0, 0.5}, 10, 7);
  CHECK(b.all_pass());
}

}  // TEST_SUITE
