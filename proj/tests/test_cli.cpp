#include "cstar/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace cstar::cli;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cstar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

const std::string kDiag123 =
    R"({"kind":"normal_matrix","n":3,"entries":[[1,0],[0,0],[0,0],[0,0],[2,0],[0,0],[0,0],[0,0],[3,0]]})";
const std::string kProjection = R"({"kind":"function_algebra","points":["a","b","c"],"values":[[1,0],[0,0],[1,0]]})";
const std::string kValues = R"({"kind":"function_algebra","points":["1","2","3"],"values":[[3,0],[5,0],[-2,0]]})";

}  // namespace

TEST_CASE("spectrum") {
  auto r = cli({"spectrum", "--doc", kDiag123});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "{1, 2, 3}\n");

  auto s = cli({"spectrum", "--doc", kDiag123, "--format", "structured"});
  CHECK(s.status == kExitOk);
  auto rec = nlohmann::json::parse(s.out);
  CHECK(rec["command"] == "spectrum");
  CHECK(rec["points"].size() == 3);
}

TEST_CASE("input files") {
  const auto path = std::filesystem::temp_directory_path() / "cstar_cli_test_doc.json";
  {
    std::ofstream f(path);
    f << kDiag123;
  }
  auto r = cli({"spectrum", "--input", path.string()});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "{1, 2, 3}\n");
  std::filesystem::remove(path);

  CHECK(cli({"spectrum", "--input", path.string()}).status == kExitInvalidInput);
}

TEST_CASE("classify") {
  auto r = cli({"classify", "--doc", kProjection});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("projection   yes") != std::string::npos);
  CHECK(r.out.find("sigma in {0,1}: yes") != std::string::npos);
  CHECK(r.out.find("unitary      no") != std::string::npos);

  auto s = cli({"classify", "--doc", kProjection, "--format", "structured"});
  std::istringstream lines(s.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto rec = nlohmann::json::parse(line);
    if (rec["flag"] == "projection") {
      CHECK(rec["holds"] == true);
      CHECK(rec["contained"] == true);
    }
    ++count;
  }
  CHECK(count == 4);
}

TEST_CASE("calculus") {
  auto r = cli({"calculus", "--doc", R"({"kind":"function_algebra","points":["p","q"],"values":[[4,0],[0.25,0]]})",
                "--fn", "sqrt"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("sigma = {0.5, 2}") != std::string::npos);

  auto p = cli({"calculus", "--doc", kValues, "--poly", "1,0,1"});
  CHECK(p.status == kExitOk);
  CHECK(p.out.find("sigma = {5, 10, 26}") != std::string::npos);

  CHECK(cli({"calculus", "--doc", kValues, "--fn", "nope"}).status == kExitInvalidInput);
  CHECK(cli({"calculus", "--doc", R"({"kind":"function_algebra","points":["p"],"values":[[0,0]]})", "--fn", "log"})
            .status == kExitInvalidInput);
}

TEST_CASE("quotient") {
  auto r = cli({"quotient", "--doc", kValues, "--subset", "1,3"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "dim A/I = 2\n[a] = {1: 3, 3: -2}\n||a + I|| = 3\n");
  CHECK(cli({"quotient", "--doc", kValues}).status == kExitInvalidInput);
  CHECK(cli({"quotient", "--doc", kValues, "--subset", "9"}).status == kExitInvalidInput);

  auto m = cli({"quotient", "--doc", kDiag123, "--subset", "2"});
  CHECK(m.status == kExitOk);
  CHECK(m.out.find("dim A/I = 1") != std::string::npos);
  CHECK(cli({"quotient", "--doc", kDiag123, "--subset", "x"}).status == kExitInvalidInput);
}

TEST_CASE("characters") {
  auto r = cli({"characters", "--doc", kValues});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "0  1  phi(a) = 3\n1  2  phi(a) = 5\n2  3  phi(a) = -2\n");
}

TEST_CASE("verify") {
  auto r = cli({"verify", "--max-size", "4", "--seed", "42"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find(" laws hold\n") != std::string::npos);

  auto s1 = cli({"verify", "--max-size", "4", "--seed", "7", "--format", "structured"});
  auto s2 = cli({"verify", "--max-size", "4", "--seed", "7", "--format", "structured"});
  CHECK(s1.status == kExitOk);
  CHECK(s1.out == s2.out);  // byte-identical for identical inputs
  std::istringstream lines(s1.out);
  std::string line;
  std::string previous;
  while (std::getline(lines, line)) {
    auto rec = nlohmann::json::parse(line);
    CHECK(rec.contains("law"));
    CHECK(rec.contains("instance"));
    CHECK(rec.contains("defect"));
    CHECK(rec["pass"] == true);
    const std::string law = rec["law"];
    CHECK(previous < law);
    previous = law;
  }

  auto with_input = cli({"verify", "--max-size", "3", "--doc", kValues});
  CHECK(with_input.status == kExitOk);
}

TEST_CASE("invalid input exits 2") {
  CHECK(cli({}).status == kExitInvalidInput);
  CHECK(cli({"frobnicate"}).status == kExitInvalidInput);
  CHECK(cli({"spectrum"}).status == kExitInvalidInput);
  CHECK(cli({"spectrum", "--doc", "{"}).status == kExitInvalidInput);
  CHECK(cli({"spectrum", "--doc", kDiag123, "--tol", "0"}).status == kExitInvalidInput);
  CHECK(cli({"verify", "--max-size", "0"}).status == kExitInvalidInput);
  CHECK(cli({"spectrum", "--doc", kDiag123, "--format", "xml"}).status == kExitInvalidInput);
  auto nn = cli({"spectrum", "--doc", R"({"kind":"normal_matrix","n":2,"entries":[[0,0],[1,0],[0,0],[0,0]]})"});
  CHECK(nn.status == kExitInvalidInput);
  CHECK(nn.err.find("NotNormal") != std::string::npos);
}

TEST_CASE("help exits 0") { CHECK(cli({"--help"}).status == kExitOk); }
