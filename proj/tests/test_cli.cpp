// Drives the built CLI binary end to end: payload schemas, verdicts, exit
// codes and byte-level determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(PTOEP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  size_t count = 0;
  while ((count = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, count);
  const int status = pclose(pipe);
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = std::move(output);
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("gamma table matches the closed form") {
  const auto result = run_cli("gamma --n 1 --m 2 --symbol \"1/(1+rho2)\"");
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(doc["command"] == "gamma");
  CHECK(doc["radial_check"] == "syntactic");
  REQUIRE(doc["rows"].size() == 3);
  const double expected[] = {0.75, 0.5, 0.25};
  for (size_t i = 0; i < 3; ++i) {
    CHECK(doc["rows"][i]["p"][0] == static_cast<int>(i));
    CHECK(std::abs(doc["rows"][i]["re"].get<double>() - expected[i]) < 1e-10);
    CHECK(std::abs(doc["rows"][i]["im"].get<double>()) < 1e-12);
  }
}

TEST_CASE("gamma csv has the pinned header") {
  const auto result = run_cli("gamma --n 2 --m 1 --symbol 1 --format csv");
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.rfind("p1,p2,re,im\n", 0) == 0);
  // header + 3 rows
  CHECK(std::count(result.output.begin(), result.output.end(), '\n') == 4);
}

TEST_CASE("gamma rejects non-radial symbols with a usage error") {
  CHECK(run_cli("gamma --n 1 --m 2 --symbol \"re(z1)\"").exit_code == 2);
  // the numeric check also rejects it
  CHECK(run_cli("gamma --n 1 --m 2 --symbol \"re(z1)\" --assert-radial").exit_code == 2);
}

TEST_CASE("gamma accepts a disguised radial symbol via --assert-radial") {
  const auto result = run_cli("gamma --n 1 --m 1 --symbol \"abs(z1)^2/(1+rho2)\" --assert-radial");
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(doc["radial_check"] == "numeric");
  CHECK(std::abs(doc["rows"][0]["re"].get<double>() - 1.0 / 3.0) < 1e-9);
  CHECK(std::abs(doc["rows"][1]["re"].get<double>() - 2.0 / 3.0) < 1e-9);
}

TEST_CASE("gram verdicts") {
  const auto pass = run_cli("gram --n 2 --m 2");
  REQUIRE(pass.exit_code == 0);
  const json doc = json::parse(pass.output);
  CHECK(doc["dimension"] == 6);
  CHECK(doc["max_deviation"].get<double>() <= 1e-8);
  CHECK(doc["pass"] == true);
  REQUIRE(doc["matrix"].size() == 6);
  REQUIRE(doc["matrix"][0].size() == 6);

  // a threshold below the rounding floor flips the verdict but still
  // reports the measured deviation
  const auto fail = run_cli("gram --n 2 --m 2 --tol 1e-20");
  CHECK(fail.exit_code == 1);
  const json fdoc = json::parse(fail.output);
  CHECK(fdoc["pass"] == false);
  CHECK(fdoc["max_deviation"].get<double>() > 1e-20);

  const auto trivial = run_cli("gram --n 1 --m 0");
  REQUIRE(trivial.exit_code == 0);
  const json tdoc = json::parse(trivial.output);
  REQUIRE(tdoc["dimension"] == 1);
  CHECK(std::abs(tdoc["matrix"][0][0]["re"].get<double>() - 1.0) < 1e-12);
}

TEST_CASE("toeplitz diagnostics for a radial symbol") {
  const auto result = run_cli("toeplitz --n 1 --m 1 --symbol \"rho2/(1+rho2)\"");
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(std::abs(doc["matrix"][0][0]["re"].get<double>() - 1.0 / 3.0) < 1e-9);
  CHECK(std::abs(doc["matrix"][1][1]["re"].get<double>() - 2.0 / 3.0) < 1e-9);
  CHECK(doc["diagonality_defect"].get<double>() <= 1e-9);
  CHECK(doc["hermiticity_defect"].get<double>() <= 1e-10);
  CHECK(doc["max_diag_vs_gamma"].get<double>() <= 1e-9);
  CHECK(std::abs(doc["operator_norm"].get<double>() - 2.0 / 3.0) < 1e-9);
}

TEST_CASE("toeplitz reports the off-diagonal witness") {
  const auto result = run_cli("toeplitz --n 1 --m 1 --symbol \"z1/(1+rho2)\"");
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(std::abs(doc["matrix"][1][0]["re"].get<double>() - 1.0 / 3.0) < 1e-8);
  CHECK(doc["diagonality_defect"].get<double>() > 0.9);
  CHECK(doc.find("max_diag_vs_gamma") == doc.end());
}

TEST_CASE("commute verdicts") {
  const auto commuting =
      run_cli("commute --n 1 --m 2 --symbol \"1/(1+rho2)\" --symbol2 \"rho2/(1+rho2)\"");
  REQUIRE(commuting.exit_code == 0);
  const json cdoc = json::parse(commuting.output);
  CHECK(cdoc["commuting"] == true);
  CHECK(cdoc["frobenius_norm"].get<double>() <= 1e-9);

  const auto witness =
      run_cli("commute --n 1 --m 1 --symbol \"rho2/(1+rho2)\" --symbol2 \"z1/(1+rho2)\"");
  CHECK(witness.exit_code == 1);
  const json wdoc = json::parse(witness.output);
  CHECK(wdoc["commuting"] == false);
  CHECK(wdoc["frobenius_norm"].get<double>() >= 0.1);
  // entry (1,0) of [T_b, T_a] with b radial is 1/9
  CHECK(std::abs(wdoc["commutator"][1][0]["re"].get<double>() - 1.0 / 9.0) < 1e-6);

  const auto self = run_cli("commute --n 1 --m 1 --symbol \"exp(-rho2)\" --symbol2 \"exp(-rho2)\"");
  CHECK(self.exit_code == 0);
  CHECK(json::parse(self.output)["frobenius_norm"].get<double>() == 0.0);
}

TEST_CASE("project emits the coefficient table") {
  const auto result = run_cli("project --n 1 --m 2 --symbol \"abs(z1)^2\"");
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  REQUIRE(doc["rows"].size() == 3);
  CHECK(std::abs(doc["rows"][0]["re"].get<double>() - 0.5) < 1e-9);
  CHECK(std::abs(doc["rows"][1]["re"].get<double>()) < 1e-10);
  CHECK(std::abs(doc["rows"][2]["re"].get<double>()) < 1e-10);

  const auto anti = run_cli("project --n 1 --m 2 --symbol \"conj(z1)\"");
  const json adoc = json::parse(anti.output);
  for (const auto& row : adoc["rows"]) {
    CHECK(std::abs(row["re"].get<double>()) < 1e-10);
    CHECK(std::abs(row["im"].get<double>()) < 1e-10);
  }
}

TEST_CASE("orbit point cloud") {
  const auto result = run_cli("orbit --radii 0.6,0.8 --grid 8");
  REQUIRE(result.exit_code == 0);
  std::istringstream lines(result.output);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == "z1_re,z1_im");
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    const double re = std::stod(line.substr(0, comma));
    const double im = std::stod(line.substr(comma + 1));
    CHECK(std::abs(std::hypot(re, im) - 4.0 / 3.0) < 1e-12);
    ++rows;
  }
  CHECK(rows == 8);

  CHECK(run_cli("orbit --radii 1,0 --grid 4").exit_code == 2);
  CHECK(run_cli("orbit --radii 0.9,0.9 --grid 4").exit_code == 2);
}

TEST_CASE("geomcheck passes on seeded samples") {
  const auto result = run_cli("geomcheck --n 2 --seed 7");
  REQUIRE(result.exit_code == 0);
  const json doc = json::parse(result.output);
  CHECK(doc["lagrangian_defect"].get<double>() <= 1e-12);
  CHECK(doc["orthogonality_defect"].get<double>() <= 1e-12);
  CHECK(doc["pass"] == true);
}

TEST_CASE("invariance verdicts") {
  const auto radial = run_cli("invariance --n 2 --symbol \"exp(-rho2)\" --trials 200 --seed 3");
  REQUIRE(radial.exit_code == 0);
  const json rdoc = json::parse(radial.output);
  CHECK(rdoc["invariant"] == true);
  CHECK(rdoc["syntactically_radial"] == true);

  const auto witness = run_cli("invariance --n 2 --symbol \"im(z2)\" --trials 200 --seed 3");
  CHECK(witness.exit_code == 1);
  const json wdoc = json::parse(witness.output);
  CHECK(wdoc["invariant"] == false);
  CHECK(wdoc["max_deviation"].get<double>() > 1e-10);
}

TEST_CASE("byte-identical reruns") {
  const std::string args = "gamma --n 2 --m 3 --symbol \"exp(-rho2)\"";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == second.output);

  const auto geom1 = run_cli("geomcheck --n 3 --seed 11 --samples 50");
  const auto geom2 = run_cli("geomcheck --n 3 --seed 11 --samples 50");
  CHECK(geom1.output == geom2.output);

  // --out writes the same bytes as stdout
  const std::string path1 = "cli_out_a.csv";
  const std::string path2 = "cli_out_b.csv";
  run_cli("orbit --radii 0.6,0.8 --grid 5 --out " + path1);
  run_cli("orbit --radii 0.6,0.8 --grid 5 --out " + path2);
  const std::string a = read_file(path1);
  const std::string b = read_file(path2);
  CHECK(!a.empty());
  CHECK(a == b);
  std::remove(path1.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("gamma --n 1 --m 2").exit_code == 2);            // missing --symbol
  CHECK(run_cli("gamma --n 0 --m 2 --symbol 1").exit_code == 2); // bad n
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("gamma --n 1 --m 2 --symbol 1 --bogus").exit_code == 2);
  CHECK(run_cli("gamma --n 1 --m 2 --symbol \"1+(\"").exit_code == 2);
  CHECK(run_cli("gram --n 1 --m 2 --angular-points 4").exit_code == 2);  // < 2m+2
  CHECK(run_cli("gram --n 1 --m 2 --radial-points 1").exit_code == 2);
  CHECK(run_cli("gram --n 2 --m 2 --format xml").exit_code == 2);
}

TEST_CASE("help exits zero") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("gamma --help").exit_code == 0);
}
