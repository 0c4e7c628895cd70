#include <doctest.h>

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "lag2d/analysis.hpp"
#include "lag2d/construct2d.hpp"
#include "lag2d/quadrature.hpp"

using namespace lag2d;

TEST_SUITE("analysis") {

TEST_CASE("closed square sum reduces to the exponential at the base index") {
  CHECK(e_sum_closed(0, 0.0, 1.0) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(e_sum_closed(0, 0.5, 0.0) ==
        doctest::Approx(1.0 / std::tgamma(1.5)).epsilon(1e-13));
}

TEST_CASE("partial sums increase toward the closed value") {
  const int n = 1;
  const double beta = 0.5;
  const cplx z{1.2, 0.3};
  const double s10 = e_sum_bruteforce(n, beta, z, 10);
  const double s20 = e_sum_bruteforce(n, beta, z, 20);
  const double s60 = e_sum_bruteforce(n, beta, z, 60);
  CHECK(s10 <= s20);
  CHECK(s20 <= s60);
  const double closed = e_sum_closed(n, beta, std::norm(z));
  CHECK(std::abs(s60 - closed) <= 1e-10 * (1.0 + closed));
}

TEST_CASE("at the origin only the lowest summand survives") {
  for (int n : {0, 1, 3})
    for (double beta : {0.0, 0.5}) {
      const double bf = e_sum_bruteforce(n, beta, cplx{}, 5);
      CHECK(std::abs(bf - e_sum_closed(n, beta, 0.0)) <= 1e-13 * (1.0 + bf));
    }
}

TEST_CASE("automatic truncation converges and reports itself") {
  truncation_info info;
  const double val = e_sum_auto(1, 0.5, cplx{1.2, 0.3}, &info);
  CHECK(info.converged);
  CHECK(info.terms > 0);
  CHECK(std::abs(val - e_sum_closed(1, 0.5, 1.53)) <= 1e-10 * (1.0 + val));
}

TEST_CASE("square sum sweep passes") {
  CHECK(check_sums({0, 1}, {0.0, 0.5}, 10, 42).all_pass());
}

TEST_CASE("band indexed sum is reported as a deviation, not a failure") {
  const report_batch b = check_shifted_sum(0, 0.0, cplx{1.0, 0.0});
  CHECK(b.count(check_status::fail) == 0);
  CHECK(b.count(check_status::boundary_deviation) == 1);
}

TEST_CASE("closed moment values") {
  CHECK(moment_closed(moment_tag::z, 1, 0, 2, 0, 0.0) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(moment_closed(moment_tag::z, 1, 0, 1, 0, 0.7) == 0.0);
  CHECK(moment_closed(moment_tag::one, 0, 0, 0, 0, 0.3) ==
        doctest::Approx(std::tgamma(1.3)).epsilon(1e-12));
  CHECK(moment_closed(moment_tag::zsq_abs, 0, 0, 0, 0, 0.3) ==
        doctest::Approx(std::tgamma(2.3)).epsilon(1e-12));
  CHECK(moment_closed(moment_tag::theta, 2, 1, 2, 1, 0.0) ==
        doctest::Approx(2.0 * M_PI).epsilon(1e-12));
  CHECK_THROWS_AS(moment_closed(moment_tag::one, 0, 1, 0, 0, 0.0),
                  const std::invalid_argument&);
}

TEST_CASE("angle moment diagonal simplification") {
  for (double beta : {0.0, 1.3})
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= m; ++n) {
        const double printed = moment_closed(moment_tag::theta, m, n, m, n, beta);
        const double simple = theta_moment_diag_simplified(m, n, beta);
        CHECK(std::abs(printed - simple) <= 1e-11 * std::abs(simple));
      }
}

TEST_CASE("moment sweeps pass at reduced resolution") {
  const resolution res{32, 32, 8, 8};
  CHECK(check_moments(moment_tag::zsq_abs, 4, 0.5, res).all_pass());
  CHECK(check_moments(moment_tag::z, 3, 0.5, res).all_pass());
  CHECK(check_moments(moment_tag::zbar, 3, 0.5, res).all_pass());
  CHECK(check_moments(moment_tag::theta, 4, 0.5, res).all_pass());
}

TEST_CASE("stratum mixing angle moments deviate from the printed zero") {
  const resolution res{32, 32, 8, 8};
  const report_batch b = check_theta_cross_stratum(2, 0.0, res);
  CHECK(b.count(check_status::fail) == 0);
  CHECK(b.count(check_status::boundary_deviation) >= 1);
  // The (1,0) vs (0,0) pair integrates to magnitude Gamma(3/2).
  CHECK(b.worst_residual(check_status::boundary_deviation) >=
        0.8862269254527580 - 1e-6);
}

TEST_CASE("quaternionic moment sweep passes including the grid oracle") {
  const resolution res{24, 24, 8, 8};
  CHECK(check_quaternion_moments(2, 0.0, res).all_pass());
}

TEST_CASE("quaternionic square sum matches the scalar closed form") {
  CHECK(check_quaternion_sum(0, 0.0, 5, 3).all_pass());
  CHECK(check_quaternion_sum(1, 0.5, 5, 3).all_pass());
}

TEST_CASE("kernel truncation and evaluation") {
  const kernel_truncation tr = auto_truncation(0, 0.0, cplx{1.0, 0.0});
  CHECK(tr.tail_bound <= 1e-12);
  CHECK(std::abs(kernel(tr, cplx{1.0, 0.0}) - std::exp(1.0)) <= 1e-8);
}

TEST_CASE("coherent vectors are normalized") {
  const cplx z{0.8, -0.6};
  const kernel_truncation tr = auto_truncation(1, 0.5, z);
  const std::vector<cplx> c = cs_vector(tr, z);
  double s = 0.0;
  for (const cplx& v : c) s += std::norm(v);
  CHECK(std::abs(s - 1.0) <= 1e-10);

  const kernel_truncation tr0 = auto_truncation(0, 0.0, cplx{});
  const std::vector<cplx> c0 = cs_vector(tr0, cplx{});
  CHECK(std::abs(c0[0] - cplx(1.0, 0.0)) <= 1e-14);
  for (std::size_t i = 1; i < c0.size(); ++i) CHECK(std::abs(c0[i]) <= 1e-14);
}

TEST_CASE("multiplier matrices on the truncated family") {
  const resolution res{32, 32, 8, 8};
  CHECK(check_quantize(0, 0.0, 8, res).all_pass());
  CHECK(check_quantize(1, 0.5, 6, res).all_pass());
}

TEST_CASE("quantized multipliers have the expected entries") {
  const resolution res{32, 32, 8, 8};
  const cmatrix az = quantize(moment_tag::z, 0, 0.0, 5, res);
  REQUIRE(az.rows == 6);
  CHECK(std::abs(az.at(0, 1) - cplx(1.0, 0.0)) <= 1e-10);
  CHECK(std::abs(az.at(1, 2) - cplx(std::sqrt(2.0), 0.0)) <= 1e-10);
  CHECK(std::abs(az.at(1, 0)) <= 1e-10);
  CHECK(std::abs(az.at(0, 2)) <= 1e-10);

  const cmatrix at = quantize(moment_tag::theta, 0, 0.0, 5, res);
  for (int i = 0; i < at.rows; ++i)
    CHECK(std::abs(at.at(i, i) - cplx(M_PI, 0.0)) <= 1e-9 * M_PI);
}

TEST_CASE("matrix helpers") {
  cmatrix a(2, 2);
  a.at(0, 0) = {1, 1};
  a.at(0, 1) = {0, 2};
  a.at(1, 0) = {3, 0};
  a.at(1, 1) = {0, -1};
  const cmatrix aa = mat_adjoint(a);
  CHECK(aa.at(1, 0) == cplx(0, -2));
  CHECK(aa.at(0, 1) == cplx(3, 0));
  const cmatrix p = mat_mul(a, mat_adjoint(a));
  CHECK(mat_max_abs_diff(p, mat_adjoint(p)) <= 1e-15);

  std::ostringstream os;
  write_matrix_csv(os, a);
  CHECK(os.str().rfind("row,col,re,im", 0) == 0);

  const nlohmann::json j = matrix_to_json(a);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 2);
  CHECK(j["entries"].size() == 2);
}

}  // TEST_SUITE
