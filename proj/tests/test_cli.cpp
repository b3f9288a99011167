#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "support.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string("\"") + AISW_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = out;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream is(line);
  std::string field;
  while (std::getline(is, field, ',')) fields.push_back(field);
  return fields;
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST_CASE("cli spectrum lists nine states split five below, four above") {
  const auto r = run_cli("spectrum");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] == "n,energy,regime,k,secondary,p_i,p_ii");
  for (int i = 1; i <= 9; ++i) {
    const auto f = fields_of(lines[i]);
    REQUIRE(f.size() == 7);
    CHECK(f[0] == std::to_string(i));
    CHECK(std::fabs(num(f[1]) - support::kEnergies33[i - 1]) <=
          1e-9 * support::kEnergies33[i - 1]);
    CHECK(f[2] == (i <= 5 ? "Below" : "Above"));
    const double sum = num(f[5]) + num(f[6]);
    CHECK(std::fabs(sum - 1.0) <= 1e-9);
  }
}

TEST_CASE("cli spectrum tags the tuned sixth state as zero curvature") {
  const auto r = run_cli("spectrum --v0 33.394444 --n-max 6");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 7);
  const auto f = fields_of(lines[6]);
  CHECK(f[0] == "6");
  CHECK(f[2] == "ZeroCurvature");
  CHECK(f[4] == "0");
}

TEST_CASE("cli spectrum reproduces the flat-bottom energies") {
  const auto r = run_cli("spectrum --v0 0 --n-max 3");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  for (int n = 1; n <= 3; ++n) {
    const double expected = std::pow(n * std::numbers::pi / 6.0, 2);
    CHECK(std::fabs(num(fields_of(lines[n])[1]) - expected) <=
          1e-9 * expected);
  }
}

TEST_CASE("cli tune matches the published step heights") {
  const auto r = run_cli("tune");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] == "n,v0,k,residual");
  for (int n = 1; n <= 9; ++n) {
    const auto f = fields_of(lines[n]);
    REQUIRE(f.size() == 4);
    const double v0 = num(f[1]);
    CHECK(std::fabs(v0 - support::kPublishedV0[n - 1]) <=
          support::published_v0_tol(n));
    CHECK(std::fabs(v0 - support::kTunedV0[n - 1]) <=
          1e-9 * support::kTunedV0[n - 1]);
    const double k = num(f[2]);
    CHECK(std::fabs(k * k - v0) <= 1e-10 * std::max(1.0, v0));
    CHECK(std::fabs(num(f[3])) <= 1e-12);
  }
}

TEST_CASE("cli tune scales with the double-size well") {
  const auto r = run_cli("tune --a 6 --b 6 --n-max 1");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  const double expected = support::kTunedV0[0] / 4.0;
  CHECK(std::fabs(num(fields_of(lines[1])[1]) - expected) <= 1e-9 * expected);
}

TEST_CASE("cli state resolves a published zero-curvature well") {
  const auto r = run_cli("state --v0 0.457318 --n 1");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "n,energy,regime,k,secondary,amp_i,amp_ii,norm,p_i,p_ii");
  const auto f = fields_of(lines[1]);
  REQUIRE(f.size() == 10);
  CHECK(f[0] == "1");
  CHECK(f[2] == "ZeroCurvature");
  CHECK(std::fabs(num(f[8]) + num(f[9]) - 1.0) <= 1e-9);
}

TEST_CASE("cli density pins the walls to exact zeros") {
  const auto r = run_cli("density --n 2 --points 101");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 102);
  CHECK(lines[0] == "x,psi,density");
  const auto first = fields_of(lines[1]);
  const auto last = fields_of(lines[101]);
  CHECK(first[0] == "-3");
  CHECK(first[1] == "0");
  CHECK(first[2] == "0");
  CHECK(last[0] == "3");
  CHECK(last[2] == "0");
  for (int i = 2; i <= 101; ++i)
    CHECK(num(fields_of(lines[i])[0]) > num(fields_of(lines[i - 1])[0]));
}

TEST_CASE("cli momentum emits a symmetric grid") {
  const auto r =
      run_cli("momentum --v0 33.3944443915 --n 6 --points 51");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 52);
  CHECK(lines[0] == "p,density");
  for (int i = 1; i <= 51; ++i) {
    const auto f = fields_of(lines[i]);
    const auto g = fields_of(lines[52 - i]);
    CHECK(std::fabs(num(f[0]) + num(g[0])) <= 1e-12);
    CHECK(std::fabs(num(f[1]) - num(g[1])) <=
          1e-9 * (1.0 + std::fabs(num(f[1]))));
  }
}

TEST_CASE("cli momentum honors an explicit grid half-width") {
  const auto r =
      run_cli("momentum --v0 33.3944443915 --n 1 --p-max 2 --points 5");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  CHECK(fields_of(lines[1])[0] == "-2");
  CHECK(fields_of(lines[5])[0] == "2");
}

TEST_CASE("cli partition tunes the ninth state and mirrors its lobes") {
  const auto r = run_cli("partition --n 9");
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "left,center,right");
  const auto f = fields_of(lines[1]);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == f[2]);
  CHECK(std::fabs(num(f[0]) - 0.3) <= 0.02);
  CHECK(std::fabs(num(f[1]) - 0.4) <= 0.02);
  CHECK(std::fabs(num(f[2]) - 0.3) <= 0.02);
}

TEST_CASE("cli partition refuses a non-zero-curvature well") {
  const auto r = run_cli("partition --v0 33 --n 6");
  CHECK(r.code == 1);
  CHECK(r.out.empty());
}

TEST_CASE("cli json spectrum parses and carries the frozen energies") {
  const auto r = run_cli("spectrum --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["well"]["v0"].get<double>() == 33.0);
  CHECK(j["well"]["mass"].get<double>() == 0.5);
  REQUIRE(j["states"].size() == 9);
  CHECK(j["states"][0]["n"].get<int>() == 1);
  CHECK(j["states"][5]["regime"].get<std::string>() == "Above");
  for (int i = 0; i < 9; ++i)
    CHECK(std::fabs(j["states"][i]["energy"].get<double>() -
                    support::kEnergies33[i]) <=
          1e-9 * support::kEnergies33[i]);
}

TEST_CASE("cli json density exports psi alongside the density") {
  const auto r = run_cli("density --v0 0 --n 1 --points 3 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["space"].get<std::string>() == "position");
  REQUIRE(j["x"].size() == 3);
  REQUIRE(j["psi"].size() == 3);
  REQUIRE(j["density"].size() == 3);
  CHECK(j["x"][0].get<double>() == -3.0);
  CHECK(j["psi"][0].get<double>() == 0.0);
  CHECK(j["density"][2].get<double>() == 0.0);
}

TEST_CASE("cli output is deterministic across runs") {
  const auto a1 = run_cli("spectrum --format json");
  const auto a2 = run_cli("spectrum --format json");
  CHECK(a1.out == a2.out);
  const auto b1 = run_cli("momentum --v0 33.3944443915 --n 6 --points 11");
  const auto b2 = run_cli("momentum --v0 33.3944443915 --n 6 --points 11");
  CHECK(b1.out == b2.out);
}

TEST_CASE("cli config file supplies defaults and flags override it") {
  const std::string path = "/tmp/aisw_cli_config_test.ini";
  {
    std::ofstream cfg(path);
    REQUIRE(cfg.good());
    cfg << "a = 3\nb = 3\nv0 = 33\nn-max = 4\n";
  }
  const auto from_cfg = run_cli("spectrum --config " + path);
  const auto from_flags = run_cli("spectrum --v0 33 --n-max 4");
  REQUIRE(from_cfg.code == 0);
  CHECK(from_cfg.out == from_flags.out);
  const auto overridden = run_cli("spectrum --config " + path + " --v0 0");
  REQUIRE(overridden.code == 0);
  const auto lines = lines_of(overridden.out);
  REQUIRE(lines.size() == 5);
  const double e1 = std::pow(std::numbers::pi / 6.0, 2);
  CHECK(std::fabs(num(fields_of(lines[1])[1]) - e1) <= 1e-9 * e1);
  std::remove(path.c_str());
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("--nope").code == 1);
  CHECK(run_cli("spectrum --a -1").code == 1);
  CHECK(run_cli("spectrum --v0 -3").code == 1);
  CHECK(run_cli("").code == 1);
  CHECK(run_cli("fling").code == 1);
  const auto help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("spectrum") != std::string::npos);
  CHECK(help.out.find("partition") != std::string::npos);
}

TEST_CASE("cli --out writes the same bytes as stdout") {
  const std::string path = "/tmp/aisw_cli_out_test.csv";
  const auto direct = run_cli("state --v0 5 --n 1");
  REQUIRE(direct.code == 0);
  const auto filed = run_cli("state --v0 5 --n 1 --out " + path);
  REQUIRE(filed.code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.out);
  std::remove(path.c_str());
  CHECK(run_cli("state --n 1 --out /nonexistent_dir_aisw/x.csv").code == 1);
}
