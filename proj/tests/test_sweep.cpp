#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "corrgap/sweep.hpp"
#include "json.hpp"

using namespace corrgap;
namespace fs = std::filesystem;

namespace {

SweepConfig small_config() {
  SweepConfig c;
  c.sites = 2;
  c.n_up = 1;
  c.n_down = 1;
  c.t = 1.0;
  c.u_over_t_min = 0.0;
  c.u_over_t_max = 2.0;
  c.steps = 3;
  return c;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(bool(f));
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

int count_char(const std::string& s, char c) {
  int n = 0;
  for (char x : s)
    if (x == c) ++n;
  return n;
}

}  // namespace

TEST_CASE("sweep grid and row contents") {
  const auto rows = run_sweep(small_config());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].u_over_t == 0.0);
  CHECK(rows[1].u_over_t == 1.0);
  CHECK(rows[2].u_over_t == 2.0);
  for (const auto& row : rows) {
    CHECK_FALSE(row.degenerate);
    const CorrelationReport direct = correlation_report(row.report.params);
    CHECK(row.report.e_gs == direct.e_gs);
    CHECK(row.report.d_overlap == direct.d_overlap);
    CHECK(row.report.delta_over_2m == direct.delta_over_2m);
  }
}

TEST_CASE("u grid is expressed in units of t") {
  SweepConfig c = small_config();
  c.t = 2.0;
  c.u_over_t_min = c.u_over_t_max = 1.5;
  c.steps = 1;
  const auto rows = run_sweep(c);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].u_over_t == 1.5);
  CHECK(rows[0].report.params.u == 3.0);
  CHECK(rows[0].report.params.t == 2.0);
}

TEST_CASE("sweep validation") {
  SweepConfig c = small_config();
  c.steps = 0;
  CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);

  c = small_config();
  c.t = 0.0;
  CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);

  c = small_config();
  c.u_over_t_max = -1.0;
  CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);

  c = small_config();
  c.steps = 1;  // endpoints still differ
  CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);
}

TEST_CASE("csv output") {
  const auto rows = run_sweep(small_config());
  const std::string csv = sweep_csv(rows);

  SUBCASE("schema") {
    const std::string header =
        "u_over_t,e_gs,e_es,e_hf,e_corr,e_gap,d_overlap,bound_ratio,entropy,"
        "delta_l1,delta_over_2n,bound_meaningful";
    CHECK(csv.rfind(header + "\n", 0) == 0);
    CHECK(count_char(csv, '\n') == 4);  // header + 3 rows
    CHECK(count_char(csv, '\r') == 0);
    CHECK(csv.back() == '\n');

    std::size_t pos = csv.find('\n') + 1;
    while (pos < csv.size()) {
      const std::size_t end = csv.find('\n', pos);
      const std::string line = csv.substr(pos, end - pos);
      CHECK(count_char(line, ',') == 11);
      const std::string last = line.substr(line.rfind(',') + 1);
      CHECK((last == "true" || last == "false"));
      pos = end + 1;
    }
  }

  SUBCASE("numbers survive a parse round-trip") {
    std::size_t pos = csv.find('\n') + 1;
    for (const auto& row : rows) {
      const std::size_t end = csv.find('\n', pos);
      std::string line = csv.substr(pos, end - pos);
      line = line.substr(0, line.rfind(','));  // drop the boolean
      const double expected[] = {row.u_over_t,         row.report.e_gs,
                                 row.report.e_es,      row.report.e_hf,
                                 row.report.e_corr,    row.report.e_gap,
                                 row.report.d_overlap, row.report.bound_ratio,
                                 row.report.entropy,   row.report.delta_l1,
                                 row.report.delta_over_2n};
      const char* cursor = line.c_str();
      for (const double want : expected) {
        char* next = nullptr;
        const double got = std::strtod(cursor, &next);
        CHECK(got == want);
        cursor = (*next == ',') ? next + 1 : next;
      }
      pos = end + 1;
    }
  }

  SUBCASE("byte-identical across runs") {
    CHECK(sweep_csv(run_sweep(small_config())) == csv);
  }
}

TEST_CASE("json output") {
  const auto rows = run_sweep(small_config());
  const auto j = nlohmann::json::parse(sweep_json(rows));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(j[i]["u_over_t"].get<double>() == rows[i].u_over_t);
    CHECK(j[i]["e_gs"].get<double>() == rows[i].report.e_gs);
    CHECK(j[i]["delta_over_2m"].get<double>() == rows[i].report.delta_over_2m);
    CHECK(j[i]["bound_meaningful"].get<bool>() == rows[i].report.bound_meaningful);
    CHECK(j[i]["degenerate"].get<bool>() == false);
    CHECK(j[i]["sector"]["s"].get<double>() == rows[i].report.sector.s);
    CHECK(j[i]["sector"]["p"].get<int>() == rows[i].report.sector.p);
  }
}

TEST_CASE("degenerate points are flagged rows, not aborts") {
  SweepConfig c;
  c.sites = 3;
  c.n_up = 2;
  c.n_down = 1;
  c.t = 1.0;
  c.u_over_t_min = 0.5;
  c.u_over_t_max = 1.0;
  c.steps = 2;
  c.sector = SymmetryLabels{0.5, 0.5, 0};  // this block is 2U times the identity

  const auto rows = run_sweep(c);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) {
    CHECK(row.degenerate);
    CHECK(std::isnan(row.report.e_gs));
    CHECK(std::isnan(row.report.d_overlap));
    CHECK(std::isnan(row.report.delta_over_2m));
  }

  const std::string csv = sweep_csv(rows);
  CHECK(csv.find("nan") != std::string::npos);

  const auto j = nlohmann::json::parse(sweep_json(rows));
  CHECK(j[0]["degenerate"].get<bool>() == true);
  CHECK(j[0]["e_gs"].is_null());  // NaN serializes as null
  CHECK_FALSE(j[0].contains("sector"));
}

TEST_CASE("sweep writes the requested file atomically") {
  const fs::path dir = fs::temp_directory_path();

  SUBCASE("csv file") {
    const fs::path out = dir / "corrgap_test_sweep.csv";
    fs::remove(out);
    SweepConfig c = small_config();
    c.out = out.string();
    const auto rows = run_sweep(c);
    CHECK(read_file(out) == sweep_csv(rows));
    CHECK_FALSE(fs::exists(out.string() + ".tmp"));
    fs::remove(out);
  }

  SUBCASE("json file") {
    const fs::path out = dir / "corrgap_test_sweep.json";
    fs::remove(out);
    SweepConfig c = small_config();
    c.out = out.string();
    c.format = OutputFormat::json;
    const auto rows = run_sweep(c);
    CHECK(read_file(out) == sweep_json(rows));
    fs::remove(out);
  }

  SUBCASE("unwritable target reports a runtime error") {
    CHECK_THROWS_AS(write_text_atomic("/nonexistent-dir/corrgap.csv", "x"), std::runtime_error);
  }
}
