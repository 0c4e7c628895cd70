#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "lag2d/cli_util.hpp"

using namespace lag2d;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(LAG2D_CLI_PATH) + " " + args + " > /dev/null 2> /dev/null";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -2;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  REQUIRE(is.good());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("complex point parser") {
  CHECK(parse_complex("1.5") == cplx(1.5, 0.0));
  CHECK(parse_complex("0.7+0.3i") == cplx(0.7, 0.3));
  CHECK(parse_complex("-2i") == cplx(0.0, -2.0));
  CHECK(parse_complex("i") == cplx(0.0, 1.0));
  CHECK(parse_complex("-i") == cplx(0.0, -1.0));
  CHECK(parse_complex("1e-3-2.5e-1i") == cplx(0.001, -0.25));
  CHECK(parse_complex(" 2 - 3i ") == cplx(2.0, -3.0));
  CHECK_THROWS_AS(parse_complex(""), const std::invalid_argument&);
  CHECK_THROWS_AS(parse_complex("abc"), const std::invalid_argument&);
  CHECK_THROWS_AS(parse_complex("1+2j"), const std::invalid_argument&);
  CHECK_THROWS_AS(parse_complex("1++2i"), const std::invalid_argument&);
  CHECK_THROWS_AS(parse_complex("1.5i5"), const std::invalid_argument&);
}

TEST_CASE("quaternion and list parsers") {
  const quaternion q = parse_quaternion("1,1,0,0");
  CHECK(q.x0 == 1.0);
  CHECK(q.x1 == 1.0);
  CHECK(q.x2 == 0.0);
  CHECK(q.x3 == 0.0);
  CHECK_THROWS_AS(parse_quaternion("1,2,3"), const std::invalid_argument&);
  const auto l = parse_double_list("0,0.5,1");
  REQUIRE(l.size() == 3);
  CHECK(l[1] == 0.5);
  CHECK_THROWS_AS(parse_double_list("0,,1"), const std::invalid_argument&);
}

TEST_CASE("value formatting") {
  CHECK(format_complex(cplx(0.0, 0.0)) == "0");
  CHECK(format_complex(cplx(1.5, -2.0)) == "1.5-2i");
  CHECK(format_quaternion({1, 0, -2, 0.5}) == "1,0,-2,0.5");
}

TEST_CASE("eval emits the value") {
  CHECK(run_cli("--format csv eval --m 1 --n 1 --beta 0 --z 1 "
                "--out cli_eval_z.txt") == 0);
  CHECK(slurp("cli_eval_z.txt") == "0\n");

  CHECK(run_cli("--format csv eval --m 3 --n 0 --beta 2 --q 1,1,0,0 "
                "--out cli_eval_q.txt") == 0);
  CHECK(slurp("cli_eval_q.txt") == "-2,2,0,0\n");

  CHECK(run_cli("--format csv eval --m 2 --n 1 --beta 0.5 --z 0.7+0.3i "
                "--dual-path --out cli_eval_dual.txt") == 0);
  const std::string dual = slurp("cli_eval_dual.txt");
  CHECK(dual.find("difference:") != std::string::npos);
}

TEST_CASE("check suites expose their verdict in the exit code") {
  CHECK(run_cli("check ladder --mmax 6 --beta 0,0.5 --out cli_ladder.json") ==
        2);
  CHECK(run_cli("check ortho --mmax 4 --beta 1") == 0);
  CHECK(run_cli("check moments --f theta --mmax 3 --beta 0.5") == 0);
  CHECK(run_cli("check moments --mmax 2 --beta 0 --cross-stratum") == 2);
}

TEST_CASE("check reports parse as structured json") {
  CHECK(run_cli("check commutators --mmax 4 --beta 0.5 "
                "--out cli_comm.json") == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp("cli_comm.json"));
  CHECK(j.contains("suite"));
  CHECK(j.contains("config"));
  REQUIRE(j.contains("reports"));
  REQUIRE(!j["reports"].empty());
  for (const auto& r : j["reports"]) {
    CHECK(r.contains("identity"));
    CHECK(r.contains("params"));
    CHECK(r.contains("residual"));
    CHECK(r.contains("tolerance"));
    CHECK(r.contains("status"));
  }
}

TEST_CASE("tables emit the advertised rows") {
  CHECK(run_cli("--format csv table coeffs --m 2 --n 1 --beta 0 "
                "--out cli_coeffs.csv") == 0);
  const std::string coeffs = slurp("cli_coeffs.csv");
  CHECK(coeffs.find("1,0,2") != std::string::npos);
  CHECK(coeffs.find("2,1,-1") != std::string::npos);

  CHECK(run_cli("--format csv table norms --mmax 3 --beta 0 "
                "--out cli_norms.csv") == 0);
  const std::string norms = slurp("cli_norms.csv");
  CHECK(norms.rfind("m,n,beta,c", 0) == 0);
  CHECK(norms.find("3,1,0,6") != std::string::npos);

  CHECK(run_cli("--format csv table quantize-matrix --f z --n 0 --beta 0 "
                "--M 5 --out cli_qm.csv") == 0);
  const std::string qm = slurp("cli_qm.csv");
  CHECK(qm.rfind("row,col,re,im", 0) == 0);
  CHECK(qm.find("1.41421") != std::string::npos);
}

TEST_CASE("usage and domain errors map to distinct exit codes") {
  CHECK(run_cli("check bogus") == 64);
  CHECK(run_cli("eval --m 1 --n 0") == 64);
  CHECK(run_cli("eval --m 1 --n 0 --z 1 --q 1,0,0,0") == 64);
  CHECK(run_cli("eval --m 1 --n 0 --z nonsense") == 65);
  CHECK(run_cli("table kernel --points 1") == 65);
  CHECK(run_cli("check ladder --beta -2") == 65);
  CHECK(run_cli("nonsense") == 64);
}

}  // TEST_SUITE
