#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cacount/cli.hpp"
#include "cacount/evalseq.hpp"
#include "cacount/scheme_io.hpp"
#include "test_support.hpp"

using namespace cacount;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cacount");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("cacount_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("synth then query the toy scheme") {
  TempDir dir;
  const std::string toy = dir.file("toy.json");
  REQUIRE(invoke({"synth", "-p", "2", "--vars", "x", "--poly", "1+x+x^2", "-o", toy}).code == 0);

  CHECK(invoke({"eval", "--scheme", toy, "--n", "5"}).out == "9\n");
  CHECK(invoke({"eval", "--scheme", toy, "--n", "0"}).out == "1\n");
  CHECK(invoke({"gf", "--scheme", toy}).out == "(1+2*t)/(1-t-2*t^2)\n");
  CHECK(invoke({"gf", "--scheme", toy, "--guess", "--terms", "8"}).out == "(1+2*t)/(1-t-2*t^2)\n");
  CHECK(invoke({"gf", "--scheme", toy, "--json"}).out == "{\"num\":[1,2],\"den\":[1,-1,-2],\"rigorous\":true}\n");
  CHECK(invoke({"terms", "--scheme", toy, "-N", "8"}).out == "1\n3\n3\n5\n3\n9\n5\n11\n");
  CHECK(invoke({"sparse", "--scheme", toy, "-K", "3"}).out == "1\n3\n5\n11\n");
  CHECK(invoke({"eval", "--scheme", toy, "--npow10", "100"}).out == "67491179529985179890010057158074951171875\n");
  CHECK(invoke({"eval", "--scheme", toy, "--pow", "3"}).out == "11\n");

  const auto j = nlohmann::json::parse(invoke({"eval", "--scheme", toy, "--n", "5", "--json"}).out);
  CHECK(j["value"] == "9");
  CHECK(j["n"] == "5");
  const auto t = nlohmann::json::parse(invoke({"terms", "--scheme", toy, "-N", "3", "--json"}).out);
  CHECK(t["terms"] == nlohmann::json({"1", "3", "3"}));

  const Result check = invoke({"check", "--scheme", toy});
  CHECK(check.code == 0);
  CHECK(check.out.find("result: PASS") != std::string::npos);
  const auto report = nlohmann::json::parse(invoke({"check", "--scheme", toy, "--json", "--nmax", "64"}).out);
  CHECK(report["passed"] == true);
}

TEST_CASE("histogram output") {
  TempDir dir;
  const std::string p3 = dir.file("p3.json");
  REQUIRE(invoke({"synth", "-p", "3", "--vars", "x", "--poly", "1+x", "-o", p3}).code == 0);
  CHECK(invoke({"eval", "--scheme", p3, "--n", "2", "--histogram"}).out == "2 2,1\n");
  CHECK(invoke({"terms", "--scheme", p3, "-N", "3", "--histogram"}).out == "0 1,0\n1 2,0\n2 2,1\n");
}

TEST_CASE("synth round trip is byte identical") {
  TempDir dir;
  for (const auto& entry : cacount::testing::corpus()) {
    const std::string path = dir.file("s.json");
    REQUIRE(invoke({"synth", "-p", std::to_string(entry.p), "--vars", entry.vars, "--poly", entry.text, "-o", path})
                .code == 0);
    const std::string text = slurp(path);
    CHECK(scheme_to_json(load_scheme(path)) == text);
    CHECK(invoke({"synth", "-p", std::to_string(entry.p), "--vars", entry.vars, "--poly", entry.text}).out == text);
  }
}

TEST_CASE("eval --pow agrees with sparse") {
  TempDir dir;
  for (const auto& entry : cacount::testing::corpus()) {
    const std::string path = dir.file("s.json");
    REQUIRE(invoke({"synth", "-p", std::to_string(entry.p), "--vars", entry.vars, "--poly", entry.text, "-o", path})
                .code == 0);
    std::istringstream sparse(invoke({"sparse", "--scheme", path, "-K", "30"}).out);
    std::string line;
    for (int k = 0; k <= 30; ++k) {
      REQUIRE(std::getline(sparse, line));
      CHECK(invoke({"eval", "--scheme", path, "--pow", std::to_string(k)}).out == line + "\n");
    }
  }
}

TEST_CASE("exit codes") {
  TempDir dir;
  const std::string toy = dir.file("toy.json");
  REQUIRE(invoke({"synth", "-p", "2", "--vars", "x", "--poly", "1+x+x^2", "-o", toy}).code == 0);

  CHECK(invoke({"synth", "-p", "2", "--vars", "x", "--poly", "2x"}).code == cli::kInvalidInput);
  CHECK(invoke({"synth", "-p", "4", "--vars", "x", "--poly", "1+x"}).code == cli::kInvalidInput);
  CHECK(invoke({"synth", "-p", "2", "--vars", "x", "--poly", "x-x"}).code == cli::kInvalidInput);
  CHECK(invoke({"synth", "-p", "2", "--vars", "x", "--poly", "1+x+x^2", "--max-states", "1"}).code ==
        cli::kResourceLimit);
  CHECK(invoke({"eval", "--scheme", toy}).code == cli::kInvalidInput);
  CHECK(invoke({"eval", "--scheme", toy, "--n", "5", "--pow", "2"}).code == cli::kInvalidInput);
  CHECK(invoke({"eval", "--scheme", toy, "--n", "five"}).code == cli::kInvalidInput);
  CHECK(invoke({"eval", "--scheme", dir.file("missing.json"), "--n", "1"}).code == cli::kInvalidInput);
  CHECK(invoke({"gf", "--scheme", toy, "--threshold", "1"}).code == cli::kResourceLimit);
  CHECK(invoke({"gf", "--scheme", toy, "--guess", "--terms", "4"}).code == cli::kInvalidInput);
  CHECK(invoke({"check", "--scheme", toy, "--budget", "10"}).code == cli::kResourceLimit);
  CHECK(invoke({"frobnicate"}).code == cli::kInvalidInput);
  CHECK(invoke({}).code == cli::kInvalidInput);
  CHECK(invoke({"--help"}).code == cli::kSuccess);

  // A corrupted transition fails verification.
  std::string text = slurp(toy);
  text.replace(text.find("[[1],[1,2]]"), 11, "[[1],[1,1]]");
  const std::string bad = dir.file("bad.json");
  std::ofstream(bad) << text;
  const Result r = invoke({"check", "--scheme", bad});
  CHECK(r.code == cli::kVerificationFailed);
  CHECK(r.out.find("[FAIL] recurrence_identity") != std::string::npos);
}
