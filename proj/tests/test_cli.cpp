#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "corrgap/sweep.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int status;
  std::string out;  // stdout only; stderr is discarded
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(CORRGAP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  const int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return {status, out};
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(bool(f));
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("report emits a single-point JSON document") {
  const CliRun r = run_cli("report --sites 2 --u-min 1");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["params"]["sites"].get<int>() == 2);
  CHECK(j["params"]["n_up"].get<int>() == 1);
  CHECK(j["params"]["n_down"].get<int>() == 1);
  CHECK(j["params"]["u"].get<double>() == 1.0);
  CHECK(j["params"]["u_over_t"].get<double>() == 1.0);
  CHECK(std::abs(j["e_gs"].get<double>() - (1.0 - std::sqrt(2.0))) < 1e-12);
  CHECK(std::abs(j["e_gap"].get<double>() - 2.0 * std::sqrt(2.0)) < 1e-12);
  const double d_exact = (std::sqrt(2.0) - 1.0) / (2.0 * std::sqrt(2.0));
  CHECK(std::abs(j["d_overlap"].get<double>() - d_exact) < 1e-12);
  CHECK(j["sector"]["s"].get<double>() == 0.0);
  CHECK(j["sector"]["p"].get<int>() == 0);
  CHECK(j.contains("delta_over_2m"));
  CHECK(j["bound_meaningful"].get<bool>());
}

TEST_CASE("report defaults to half filling and scales u by t") {
  const CliRun r3 = run_cli("report --sites 3 --u-min 0");
  REQUIRE(r3.status == 0);
  const auto j3 = nlohmann::json::parse(r3.out);
  CHECK(j3["params"]["n_up"].get<int>() == 2);
  CHECK(j3["params"]["n_down"].get<int>() == 1);
  CHECK(std::abs(j3["e_gap"].get<double>() - 1.5) < 1e-12);
  CHECK(std::abs(j3["e_corr"].get<double>()) < 1e-12);

  const CliRun rt = run_cli("report --sites 2 --u-min 1 --t 2");
  REQUIRE(rt.status == 0);
  const auto jt = nlohmann::json::parse(rt.out);
  CHECK(jt["params"]["t"].get<double>() == 2.0);
  CHECK(jt["params"]["u"].get<double>() == 2.0);
  CHECK(std::abs(jt["e_gs"].get<double>() - 2.0 * (1.0 - std::sqrt(2.0))) < 1e-12);
}

TEST_CASE("report accepts an explicit sector") {
  const CliRun r = run_cli("report --sites 3 --u-min 2 --sector 0.5,0.5,1");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sector"]["p"].get<int>() == 1);

  const CliRun partner = run_cli("report --sites 3 --u-min 2 --sector 0.5,0.5,2");
  REQUIRE(partner.status == 0);
  const auto jp = nlohmann::json::parse(partner.out);
  CHECK(std::abs(j["e_gs"].get<double>() - jp["e_gs"].get<double>()) < 1e-10);
}

TEST_CASE("report exit codes") {
  SUBCASE("degenerate sector") {
    CHECK(run_cli("report --sites 3 --u-min 1 --sector 0.5,0.5,0").status == 3);
  }
  SUBCASE("invalid model") {
    CHECK(run_cli("report --sites 2 --u-min 1 --t 0").status == 2);
  }
  SUBCASE("unknown sector labels") {
    CHECK(run_cli("report --sites 2 --u-min 1 --sector 9,9,9").status == 2);
  }
  SUBCASE("malformed sector text") {
    CHECK(run_cli("report --sites 2 --u-min 1 --sector banana").status == 2);
  }
  SUBCASE("conflicting u range") {
    const CliRun r = run_cli("report --sites 2 --u-min 1 --u-max 2");
    CHECK(r.status == 2);
    CHECK(r.out.empty());
  }
  SUBCASE("equal u range is accepted") {
    CHECK(run_cli("report --sites 2 --u-min 1 --u-max 1").status == 0);
  }
  SUBCASE("missing required flag") {
    CHECK(run_cli("report --sites 2").status != 0);
  }
}

TEST_CASE("sweep writes the same file the library produces") {
  const fs::path out = fs::temp_directory_path() / "corrgap_cli_sweep.csv";
  fs::remove(out);
  const CliRun r =
      run_cli("sweep --sites 2 --u-min 0 --u-max 2 --steps 3 --out " + out.string());
  REQUIRE(r.status == 0);

  corrgap::SweepConfig cfg;
  cfg.sites = 2;
  cfg.n_up = cfg.n_down = 1;
  cfg.u_over_t_min = 0.0;
  cfg.u_over_t_max = 2.0;
  cfg.steps = 3;
  CHECK(read_file(out) == corrgap::sweep_csv(corrgap::run_sweep(cfg)));
  fs::remove(out);
}

TEST_CASE("sweep json format") {
  const fs::path out = fs::temp_directory_path() / "corrgap_cli_sweep.json";
  fs::remove(out);
  const CliRun r = run_cli("sweep --sites 3 --u-min 0 --u-max 1 --steps 2 --format json --out " +
                           out.string());
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(read_file(out));
  REQUIRE(j.is_array());
  CHECK(j.size() == 2);
  CHECK(j[0]["degenerate"].get<bool>() == false);
  fs::remove(out);
}

TEST_CASE("sweep keeps going through degenerate points") {
  const fs::path out = fs::temp_directory_path() / "corrgap_cli_degenerate.csv";
  fs::remove(out);
  const CliRun r = run_cli(
      "sweep --sites 3 --u-min 0.5 --u-max 1 --steps 2 --sector 0.5,0.5,0 --out " + out.string());
  CHECK(r.status == 0);
  CHECK(read_file(out).find("nan") != std::string::npos);
  fs::remove(out);
}

TEST_CASE("sweep rejects bad arguments") {
  const std::string out = (fs::temp_directory_path() / "corrgap_cli_never.csv").string();
  CHECK(run_cli("sweep --u-min 0 --u-max 1 --steps 0 --out " + out).status == 2);
  CHECK(run_cli("sweep --u-min 1 --u-max 0 --steps 2 --out " + out).status == 2);
  CHECK(run_cli("sweep --u-min 0 --u-max 1 --steps 2 --format yaml --out " + out).status == 2);
  CHECK(run_cli("sweep --u-min 0 --u-max 1 --steps 2").status != 0);  // --out required
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("config file supplies defaults and flags override it") {
  const fs::path cfg = fs::temp_directory_path() / "corrgap_cli.cfg";
  {
    std::ofstream f(cfg);
    f << "sites=3\n";
    f << "u-min=2\n";
  }

  const CliRun from_file = run_cli("report --config " + cfg.string());
  REQUIRE(from_file.status == 0);
  const auto j = nlohmann::json::parse(from_file.out);
  CHECK(j["params"]["sites"].get<int>() == 3);
  CHECK(j["params"]["u_over_t"].get<double>() == 2.0);

  const CliRun overridden = run_cli("report --config " + cfg.string() + " --u-min 1");
  REQUIRE(overridden.status == 0);
  const auto jo = nlohmann::json::parse(overridden.out);
  CHECK(jo["params"]["sites"].get<int>() == 3);
  CHECK(jo["params"]["u_over_t"].get<double>() == 1.0);
  fs::remove(cfg);
}

TEST_CASE("verify runs every suite and reports a clean bill") {
  const CliRun r = run_cli("verify --seed 12345");
  CHECK(r.status == 0);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("ALL PASSED") != std::string::npos);
}
