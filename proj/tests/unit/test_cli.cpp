#include <cstdio>
#include <filesystem>
#include <fstream>

#include "commands.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "report.hpp"

using namespace gl2q::cli;
using gl2q::quantum::CMatrix;
using gl2q::quantum::Complex;

namespace {

RunResult call(std::vector<std::string> args) { return run(args); }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gl2q_test_" + name)).string();
}

void save(const RunResult& r, const std::string& path) {
  std::ofstream(path) << r.report.dump(2) << "\n";
}

}  // namespace

TEST_CASE("empty and malformed invocations are usage errors") {
  CHECK(call({}).exit_code == kUsage);
  CHECK(call({"frobnicate"}).exit_code == kUsage);
  CHECK(call({"classify", "a+=x"}).exit_code == kUsage);
  CHECK(call({"classify", "q=1"}).exit_code == kUsage);
  CHECK(call({"quantum", "ybe", "--which", "III"}).exit_code == kUsage);
  CHECK(call({"chain", "build", "--bonds", "20"}).exit_code == kUsage);
  CHECK(call({"chain", "spectrum", "/nonexistent/file.json"}).exit_code == kUsage);
}

TEST_CASE("classify reports family and type") {
  const auto r = call({"classify", "a+=1", "a-=1", "b+=2", "b-=-2", "a=1", "b=2"});
  REQUIRE(r.exit_code == kPass);
  CHECK(r.report["command"] == "classify");
  CHECK(r.report["outputs"]["family"] == "I+");
  CHECK(r.report["outputs"]["type"] == "standard");
  const auto bad = call({"classify", "a+=1", "b=1"});
  CHECK(bad.exit_code == kVerificationFailed);
}

TEST_CASE("exact rationals travel as strings") {
  const auto r = call({"classify", "a+=1/3", "a-=0", "b+=0", "b-=0", "a=0", "b=0"});
  REQUIRE(r.exit_code == kPass);
  CHECK(r.report["outputs"]["discriminant"] == "0");
  CHECK(r.report["outputs"]["type"] == "non-standard");
}

TEST_CASE("contraction exponents") {
  const auto r = call({"contract", "--family", "II-nonstandard"});
  REQUIRE(r.exit_code == kPass);
  const auto& e = r.report["outputs"]["exponents"];
  CHECK(e["b"] == 2);
  CHECK(e["b+"] == 3);
  CHECK(e["b-"] == 3);
}

TEST_CASE("mCYBE to Jacobi matching from the command line") {
  const auto r = call({"schouten", "--check-jacobi"});
  REQUIRE(r.exit_code == kPass);
  CHECK(r.report["outputs"]["matches_jacobi"] == true);
}

TEST_CASE("verification failures use exit code 2") {
  const std::string path = temp_path("periodic.json");
  const auto built = call({"--out", path, "chain", "build", "--bonds", "3", "--b", "1", "--boundary", "periodic"});
  REQUIRE(built.exit_code == kPass);
  save(built, path);
  const auto checked = call({"chain", "invariance", path});
  CHECK(checked.exit_code == kVerificationFailed);
  CHECK(checked.report["verdict"]["pass"] == false);
  std::remove(path.c_str());
}

TEST_CASE("open chain round trip through JSON files") {
  const std::string path = temp_path("open.json");
  const auto built = call({"chain", "build", "--bonds", "3", "--b", "0.4", "--bplus", "0.3"});
  REQUIRE(built.exit_code == kPass);
  save(built, path);
  CHECK(call({"chain", "invariance", path}).exit_code == kPass);
  const auto spec = call({"chain", "spectrum", path});
  REQUIRE(spec.exit_code == kPass);
  CHECK(spec.report["outputs"]["is_real"] == true);
  CHECK(spec.report["outputs"]["eigenvalues"].size() == 16);
  std::remove(path.c_str());
}

TEST_CASE("same seed gives a byte-identical report") {
  const std::vector<std::string> args{"--seed", "42", "quantum", "coassoc", "--quantization", "jordanian",
                                      "--method", "primitive-scalar", "--aplus", "0.7", "--bplus", "0.2"};
  const auto first = call(args), second = call(args);
  REQUIRE(first.exit_code == kPass);
  CHECK(first.report.dump() == second.report.dump());
}

TEST_CASE("reports round-trip losslessly") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"quantum", "ybe", "--which", "Ia", "--aplus", "1", "--a", "0.6931471805599453"},
           {"quantum", "casimir", "--quantization", "xxz", "--a", "0.3", "--b", "0.2"},
           {"poisson", "entries"},
           {"algebra", "show", "--algebra", "h4"}}) {
    const auto r = call(args);
    INFO(args[0] << " " << args[1]);
    REQUIRE(r.exit_code == kPass);
    const std::string text = r.report.dump(2);
    CHECK(Json::parse(text) == r.report);
    CHECK(Json::parse(text).dump(2) == text);
  }
}

TEST_CASE("matrix serialization round trip") {
  gl2q::testing::Rng rng;
  CMatrix m(3, 4);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = i == j ? Complex(rng.real(-1, 1), rng.real(-1, 1)) : Complex(0.0);
  }
  const CMatrix dense_back(matrix_from_json(Json::parse(dense_to_json(m).dump())));
  CHECK((dense_back - m).cwiseAbs().maxCoeff() == 0.0);
  const gl2q::quantum::SparseMatrix sp = m.sparseView();
  const CMatrix sparse_back(matrix_from_json(Json::parse(sparse_to_json(sp).dump())));
  CHECK((sparse_back - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("quantum subcommands pass at the documented tolerances") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"quantum", "rep", "--which", "Ia", "--aplus", "0.5", "--a", "0.8"},
           {"quantum", "ybe", "--which", "II-exp", "--bplus", "0.5", "--b", "0.8"},
           {"quantum", "intertwine", "--which", "II", "--bplus", "0.5", "--b", "0.8"},
           {"quantum", "intertwine", "--which", "Ia", "--aplus", "0.5", "--a", "0.8"},
           {"quantum", "hom", "--quantization", "lm", "--bplus", "0.5", "--bminus", "0.3", "--b", "0.8"},
           {"quantum", "coassoc", "--quantization", "xxz", "--a", "0.5", "--b", "0.8"},
           {"quantum", "casimir", "--quantization", "Ia", "--aplus", "0.5", "--a", "0.8"}}) {
    INFO(args[1] << " " << args[3]);
    CHECK(call(args).exit_code == kPass);
  }
}
