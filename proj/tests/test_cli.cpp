#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <doctest.h>

#include "hyperinv/serialization.hpp"
#include "hyperinv/tensor.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("HYPERINV_CLI");
  REQUIRE(cli != nullptr);
  const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string tmp_path(const std::string& name) {
  const char* dir = std::getenv("HYPERINV_TEST_TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("count command") {
  SUBCASE("n=4 r=2") {
    const auto res = run_cli("count --n 4 --r 2");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("282") != std::string::npos);
    CHECK(res.output.find("classes: 5") != std::string::npos);
  }
  SUBCASE("n=1 r=7") {
    const auto res = run_cli("count --n 1 --r 7");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("1") != std::string::npos);
  }
  SUBCASE("n=4 r=4 reports the published-value disagreement") {
    const auto res = run_cli("count --n 4 --r 4");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("10147") != std::string::npos);
    CHECK(res.output.find("classes: 43") != std::string::npos);
    CHECK(res.output.find("7558") != std::string::npos);
  }
  SUBCASE("json output") {
    const auto res = run_cli("count --n 3 --r 2 --json");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"count\": 21") != std::string::npos);
    CHECK(res.output.find("\"classes\": 3") != std::string::npos);
  }
}

TEST_CASE("expand command") {
  SUBCASE("rank 4 order 2 json") {
    const auto res = run_cli("expand --rank 4 --order 2 --format json");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"prefactor_denominator\": 2") != std::string::npos);
    CHECK(res.output.find("\"coefficient\": -4") != std::string::npos);
    CHECK(res.output.find("\"coefficient\": 3") != std::string::npos);
  }
  SUBCASE("rank 2 order 3 coefficients") {
    const auto res = run_cli("expand --rank 2 --order 3");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"prefactor_denominator\": 6") != std::string::npos);
    CHECK(res.output.find("\"coefficient\": -3") != std::string::npos);
    CHECK(res.output.find("\"coefficient\": 2") != std::string::npos);
  }
  SUBCASE("rank 6 order 2 coefficients") {
    const auto res = run_cli("expand --rank 6 --order 2");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"coefficient\": -6") != std::string::npos);
    CHECK(res.output.find("\"coefficient\": 15") != std::string::npos);
    CHECK(res.output.find("\"coefficient\": -10") != std::string::npos);
  }
  SUBCASE("latex format") {
    const auto res = run_cli("expand --rank 4 --order 2 --format latex");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\\begin{pmatrix}") != std::string::npos);
  }
  SUBCASE("cap exceeded exits 3") {
    const auto res = run_cli("--cap 10 expand --rank 4 --order 4");
    CHECK(res.exit_code == 3);
  }
  SUBCASE("environment cap is honored") {
    const char* cli = std::getenv("HYPERINV_CLI");
    REQUIRE(cli != nullptr);
    const std::string cmd = "HYPERINV_CAP=10 " + std::string(cli) +
                            " expand --rank 4 --order 4 >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
  }
}

TEST_CASE("eval command") {
  using namespace hyperinv;
  SUBCASE("rank-2 determinant") {
    HyperMatrix a(2, 2, Variance::covariant, {1, 2, 3, 4});
    const auto path = tmp_path("a2.json");
    std::ofstream(path) << emit_tensor_document(a);
    const auto res = run_cli("eval --tensor " + path + " --det");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("-2") != std::string::npos);
  }
  SUBCASE("rank-4 diagonal determinant") {
    HyperMatrix A(4, 2, Variance::covariant);
    A.at({0, 0, 0, 0}) = 2.0;
    A.at({1, 1, 1, 1}) = 3.0;
    const auto path = tmp_path("a4.json");
    std::ofstream(path) << emit_tensor_document(A);
    const auto res = run_cli("eval --tensor " + path + " --det --ch-check");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"det\": 6") != std::string::npos);
    CHECK(res.output.find("\"ch_pass\": true") != std::string::npos);
  }
  SUBCASE("hyperdeterminant of a diagonal third-rank tensor") {
    HyperMatrix a(3, 2, Variance::covariant);
    a.at({0, 0, 0}) = 1.0;
    a.at({1, 1, 1}) = 1.0;
    const auto path = tmp_path("a3.json");
    std::ofstream(path) << emit_tensor_document(a);
    const auto res = run_cli("eval --tensor " + path + " --hyperdet222 --oracle --order-s 2");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"hyperdet222\": 1") != std::string::npos);
    CHECK(res.output.find("\"oracle\": 1") != std::string::npos);
  }
  SUBCASE("characteristic polynomial of a rank-2 tensor") {
    HyperMatrix a(2, 2, Variance::covariant, {1, 2, 3, 4});
    const auto path = tmp_path("acp.json");
    std::ofstream(path) << emit_tensor_document(a);
    const auto res = run_cli("eval --tensor " + path + " --charpoly");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"charpoly\": [1, 5, -2]") != std::string::npos);
  }
  SUBCASE("malformed file exits 2") {
    const auto path = tmp_path("bad.json");
    std::ofstream(path) << "{\"rank\": 2}";
    const auto res = run_cli("eval --tensor " + path + " --det");
    CHECK(res.exit_code == 2);
  }
  SUBCASE("singular inverse exits 4") {
    HyperMatrix a(2, 2, Variance::covariant, {1, 2, 2, 4});
    const auto path = tmp_path("sing.json");
    std::ofstream(path) << emit_tensor_document(a);
    const auto res = run_cli("eval --tensor " + path + " --inverse");
    CHECK(res.exit_code == 4);
  }
}

TEST_CASE("verify command determinism") {
  const auto first = run_cli("verify --seed 7 --suite fast");
  const auto second = run_cli("verify --seed 7 --suite fast");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("SUMMARY") != std::string::npos);
  CHECK(first.output.find("FAIL") == std::string::npos);
}
