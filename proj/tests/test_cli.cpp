// End-to-end tests that spawn the installed CLI binary. The path to the
// binary arrives through the ISOP_CLI environment variable (set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output; // stdout and stderr combined
};

std::string cli_path() {
  const char* env = std::getenv("ISOP_CLI");
  REQUIRE_MESSAGE(env != nullptr, "ISOP_CLI must point at the CLI binary");
  return env;
}

RunResult run(const std::string& args) {
  const std::string cmd = "'" + cli_path() + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

class TempSpec {
 public:
  explicit TempSpec(const std::string& body) {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("isop_cli_test_" + std::to_string(getpid()) + "_" +
             std::to_string(counter++) + ".json");
    std::ofstream out(path_);
    out << body;
  }
  ~TempSpec() {
    std::error_code ec;
    fs::remove(path_, ec);
  }
  std::string str() const { return "'" + path_.string() + "'"; }

 private:
  fs::path path_;
};

const std::string kLaplace = R"({
  "p": 2, "n": 3,
  "factors": [{ "alphas": [0, 0, 0], "lambda": 0, "k": 1 }]
})";

const std::string kEulerMultilog = R"({
  "p": 1, "n": 1,
  "factors": [{ "alphas": [1], "lambda": 0, "k": 2 }]
})";

const std::string kSharedRoot = R"({
  "p": 1, "n": 1,
  "factors": [{ "alphas": [1], "lambda": -1, "k": 1 },
              { "alphas": [-3], "lambda": 3, "k": 1 }]
})";

} // namespace

TEST_CASE("roots prints the factor analysis") {
  TempSpec spec(kLaplace);
  const auto res = run("roots " + spec.str());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("phi = 0.5") != std::string::npos);
  CHECK(res.output.find("I1") != std::string::npos);
  CHECK(res.output.find("m1 = 0") != std::string::npos);
  CHECK(res.output.find("m2 = -1") != std::string::npos);
}

TEST_CASE("solve lists the Euler multilog basis") {
  TempSpec spec(kEulerMultilog);
  const auto res = run("solve " + spec.str());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("u_1 = 1\n") != std::string::npos);
  CHECK(res.output.find("u_2 = ln x\n") != std::string::npos);
  CHECK(res.output.find("u_3 = (ln x)^2\n") != std::string::npos);
  CHECK(res.output.find("u_4 = (ln x)^3\n") != std::string::npos);
  CHECK(res.output.find("4 terms") != std::string::npos);
}

TEST_CASE("solve --json round-trips through eval") {
  TempSpec spec(kEulerMultilog);
  const auto solved = run("solve --json " + spec.str());
  REQUIRE(solved.exit_code == 0);
  const json doc = json::parse(solved.output);
  CHECK(doc.at("schema") == "isop.basis/1");
  CHECK(doc.at("count") == 4);
  REQUIRE(doc.at("terms").size() == 4);

  // Recompute the all-ones combination at x = e from the machine payload
  // and compare against cmd_eval: sum of (ln x)^l is 4 at ln x = 1.
  const double x = std::exp(1.0);
  double expected = 0.0;
  for (const auto& term : doc.at("terms")) {
    REQUIRE(term.at("kind") == "power_log");
    const double e = term.at("exponent").get<double>();
    const int l = term.at("log_power").get<int>();
    expected += std::pow(x, e) * std::pow(std::log(x), l);
  }
  char at[64];
  std::snprintf(at, sizeof at, "%.17g", x); // std::to_string would truncate
  const auto evaled = run("eval " + spec.str() + " --at " + at);
  REQUIRE(evaled.exit_code == 0);
  CHECK(std::abs(std::stod(evaled.output) - expected) <= 1e-12 * expected);
}

TEST_CASE("verify exits 0 on a sound spec and 1 on an injected term") {
  TempSpec spec(kLaplace);
  const auto ok = run("verify " + spec.str());
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("PASS") != std::string::npos);

  const auto bad = run("verify --inject 5 " + spec.str());
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("FAIL") != std::string::npos);
  CHECK(bad.output.find("r^(5.0)") != std::string::npos);

  const auto with_log = run("verify --inject 5,1 " + spec.str());
  CHECK(with_log.exit_code == 1);
  CHECK(with_log.output.find("r^(5.0) * ln r") != std::string::npos);
}

TEST_CASE("verify --points 0 runs symbolically only") {
  TempSpec spec(kLaplace);
  const auto res = run("verify --points 0 --json " + spec.str());
  CHECK(res.exit_code == 0);
  const json doc = json::parse(res.output);
  CHECK(doc.at("numeric_skipped") == true);
  CHECK(doc.at("passed") == true);
}

TEST_CASE("verify reports are byte-identical for identical file and seed") {
  TempSpec spec(kLaplace);
  const auto a = run("verify --json --seed 9 " + spec.str());
  const auto b = run("verify --json --seed 9 " + spec.str());
  REQUIRE(a.exit_code == 0);
  CHECK(a.output == b.output);
  const auto c = run("verify --json --seed 10 " + spec.str());
  CHECK(a.output != c.output);
}

TEST_CASE("verify --mode combined merges shared roots") {
  TempSpec spec(kSharedRoot);
  const auto combined = run("solve --json " + spec.str());
  REQUIRE(combined.exit_code == 0);
  // File has no mode option: paper-literal duplicates the shared root.
  const json literal = json::parse(combined.output);
  CHECK(literal.at("mode") == "paper-literal");

  const auto verified = run("verify --mode combined --json " + spec.str());
  REQUIRE(verified.exit_code == 0);
  const json doc = json::parse(verified.output);
  CHECK(doc.at("mode") == "combined-multiplicity");
  bool has_log_term = false;
  for (const auto& term : doc.at("terms"))
    if (term.at("text") == "x^(1.0) * ln x") has_log_term = true;
  CHECK(has_log_term);
}

TEST_CASE("eval handles coefficients and reports domain errors") {
  TempSpec spec(kLaplace);
  const auto ok = run("eval " + spec.str() + " --at 1,2,2 --coeffs 0,1");
  REQUIRE(ok.exit_code == 0);
  CHECK(std::abs(std::stod(ok.output) - 1.0 / 3.0) < 1e-15);

  const auto zeros = run("eval " + spec.str() + " --at 1,2,2 --coeffs 0,0");
  REQUIRE(zeros.exit_code == 0);
  CHECK(std::stod(zeros.output) == 0.0);

  const auto domain = run("eval " + spec.str() + " --at 0,1,1");
  CHECK(domain.exit_code == 2);
  CHECK(domain.output.find("coordinate") != std::string::npos);

  const auto mismatch = run("eval " + spec.str() + " --at 1,1,1 --coeffs 1");
  CHECK(mismatch.exit_code == 2);
  CHECK(mismatch.output.find("coefficient") != std::string::npos);
}

TEST_CASE("input problems exit 2 with a named diagnostic") {
  TempSpec zero_k(R"({"p": 1, "n": 1,
      "factors": [{"alphas": [1], "lambda": 0, "k": 0}]})");
  const auto invalid = run("roots " + zero_k.str());
  CHECK(invalid.exit_code == 2);
  CHECK(invalid.output.find("factors[0].k") != std::string::npos);

  TempSpec garbled("{ definitely: not json");
  const auto parse = run("solve " + garbled.str());
  CHECK(parse.exit_code == 2);
  CHECK(parse.output.find("line") != std::string::npos);

  const auto missing = run("verify '/no/such/file.json'");
  CHECK(missing.exit_code == 2);

  const auto usage = run("frobnicate");
  CHECK(usage.exit_code == 2);

  const auto no_args = run("");
  CHECK(no_args.exit_code == 2);
}

TEST_CASE("--version prints something version-shaped") {
  const auto res = run("--version");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find('.') != std::string::npos);
}
