#include "corrgap/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace corrgap {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void validate(const SweepConfig& c) {
  if (c.steps < 1) throw std::invalid_argument("sweep needs steps >= 1");
  if (!(c.t > 0.0)) throw std::invalid_argument("sweep needs t > 0");
  if (c.u_over_t_max < c.u_over_t_min) {
    throw std::invalid_argument("sweep needs u_over_t_max >= u_over_t_min");
  }
  if (c.steps == 1 && c.u_over_t_max != c.u_over_t_min) {
    throw std::invalid_argument("a single-step sweep needs u_over_t_max == u_over_t_min");
  }
}

nlohmann::json row_to_json(const SweepRow& row) {
  const CorrelationReport& r = row.report;
  nlohmann::json j{
      {"u_over_t", row.u_over_t},
      {"e_gs", r.e_gs},
      {"e_es", r.e_es},
      {"e_hf", r.e_hf},
      {"e_corr", r.e_corr},
      {"e_gap", r.e_gap},
      {"d_overlap", r.d_overlap},
      {"bound_ratio", r.bound_ratio},
      {"entropy", r.entropy},
      {"delta_l1", r.delta_l1},
      {"delta_over_2n", r.delta_over_2n},
      {"delta_over_2m", r.delta_over_2m},
      {"bound_meaningful", r.bound_meaningful},
      {"degenerate", row.degenerate},
  };
  if (!row.degenerate) {
    j["sector"] = {{"s", r.sector.s}, {"m", r.sector.m}, {"p", r.sector.p}};
  }
  return j;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  validate(config);
  std::vector<SweepRow> rows;
  rows.reserve(config.steps);

  for (int i = 0; i < config.steps; ++i) {
    const double u_over_t =
        (config.steps == 1)
            ? config.u_over_t_min
            : config.u_over_t_min +
                  i * (config.u_over_t_max - config.u_over_t_min) / (config.steps - 1);
    ModelParams params;
    params.sites = config.sites;
    params.t = config.t;
    params.u = u_over_t * config.t;
    params.n_up = config.n_up;
    params.n_down = config.n_down;

    SweepRow row;
    row.u_over_t = u_over_t;
    try {
      ReportOptions opts;
      opts.sector = config.sector;
      row.report = correlation_report(params, opts);
    } catch (const DegeneracyError&) {
      row.degenerate = true;
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.report = CorrelationReport{};
      row.report.params = params;
      row.report.e_gs = row.report.e_es = row.report.e_hf = nan;
      row.report.e_corr = row.report.e_gap = nan;
      row.report.d_overlap = row.report.bound_ratio = nan;
      row.report.entropy = row.report.delta_l1 = nan;
      row.report.delta_over_2n = row.report.delta_over_2m = nan;
      row.report.bound_meaningful = false;
    }
    rows.push_back(std::move(row));
  }

  if (!config.out.empty()) {
    const std::string text =
        (config.format == OutputFormat::csv) ? sweep_csv(rows) : sweep_json(rows);
    write_text_atomic(config.out, text);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "u_over_t,e_gs,e_es,e_hf,e_corr,e_gap,d_overlap,bound_ratio,entropy,"
      "delta_l1,delta_over_2n,bound_meaningful\n";
  for (const auto& row : rows) {
    const CorrelationReport& r = row.report;
    out += fmt17(row.u_over_t);
    for (const double v : {r.e_gs, r.e_es, r.e_hf, r.e_corr, r.e_gap, r.d_overlap,
                           r.bound_ratio, r.entropy, r.delta_l1, r.delta_over_2n}) {
      out += ',';
      out += fmt17(v);
    }
    out += ',';
    out += r.bound_meaningful ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& row : rows) j.push_back(row_to_json(row));
  return j.dump(2) + "\n";
}

void write_text_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for writing: " + tmp.string());
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("rename to " + target.string() + " failed: " + ec.message());
  }
}

}  // namespace corrgap
