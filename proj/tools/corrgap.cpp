#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "corrgap/measures.hpp"
#include "corrgap/sweep.hpp"
#include "corrgap/verify.hpp"

namespace {

struct CommonArgs {
  int sites = 2;
  int n_up = -1;  // -1 = half filling for the chosen ring
  int n_down = -1;
  double t = 1.0;
  std::string sector = "auto";
  std::uint64_t seed = 0;
  std::string config;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--sites", args.sites, "Ring size")->capture_default_str();
  cmd->add_option("--n-up", args.n_up, "Spin-up count (default: half filling)");
  cmd->add_option("--n-down", args.n_down, "Spin-down count (default: half filling)");
  cmd->add_option("--t", args.t, "Hopping scale t > 0")->capture_default_str();
  cmd->add_option("--sector", args.sector,
                  "Symmetry sector as 's,m,p', or 'auto' for the ground sector")
      ->capture_default_str();
  cmd->add_option("--seed", args.seed, "RNG seed for stochastic searches")->capture_default_str();
  cmd->add_option("--config", args.config, "Flat key=value config file; flags override it");
}

std::string trimmed(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

// Expands `--config FILE` before the real parse: every key=value line becomes
// the flag --key value unless that flag is already on the command line, so
// explicit flags always win. Blank lines and #-comments are allowed.
std::vector<std::string> expand_config_args(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      break;
    }
  }
  if (path.empty()) return args;

  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot read config file: " + path);

  const auto already_given = [&args](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&flag](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };

  std::string line;
  int lineno = 0;
  while (std::getline(file, line)) {
    ++lineno;
    line = trimmed(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || trimmed(line.substr(0, eq)).empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " is not key=value: " + line);
    }
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));
    if (key == "config") continue;
    const std::string flag = "--" + key;
    if (!already_given(flag)) {
      args.push_back(flag);
      args.push_back(value);
    }
  }
  return args;
}

void resolve_filling(CommonArgs& args) {
  if (args.n_up < 0) args.n_up = (args.sites + 1) / 2;
  if (args.n_down < 0) args.n_down = args.sites / 2;
}

std::optional<corrgap::SymmetryLabels> parse_sector(const std::string& text) {
  if (text == "auto" || text.empty()) return std::nullopt;
  corrgap::SymmetryLabels labels;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%d%c", &labels.s, &labels.m, &labels.p, &trailing) != 3) {
    throw std::invalid_argument("--sector expects 's,m,p' (e.g. 0.5,0.5,2) or 'auto'");
  }
  return labels;
}

nlohmann::json report_to_json(const corrgap::CorrelationReport& r, double u_over_t) {
  return nlohmann::json{
      {"params",
       {{"sites", r.params.sites},
        {"t", r.params.t},
        {"u", r.params.u},
        {"u_over_t", u_over_t},
        {"n_up", r.params.n_up},
        {"n_down", r.params.n_down}}},
      {"sector", {{"s", r.sector.s}, {"m", r.sector.m}, {"p", r.sector.p}}},
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
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-diagonalization correlation measures for small Hubbard rings"};
  app.require_subcommand(1);

  CommonArgs report_args;
  double report_u_min = 0.0;
  double report_u_max = 0.0;
  CLI::App* report_cmd = app.add_subcommand("report", "Single-point report as JSON on stdout");
  add_common(report_cmd, report_args);
  report_cmd->add_option("--u-min", report_u_min, "Interaction U/t at the report point")
      ->required();
  CLI::Option* report_u_max_opt = report_cmd->add_option(
      "--u-max", report_u_max, "Accepted for symmetry with sweep; must equal --u-min");

  CommonArgs sweep_args;
  corrgap::SweepConfig sweep_cfg;
  std::string format = "csv";
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Uniform U/t grid written to a file");
  add_common(sweep_cmd, sweep_args);
  sweep_cmd->add_option("--u-min", sweep_cfg.u_over_t_min, "Grid start (U/t)")
      ->capture_default_str();
  sweep_cmd->add_option("--u-max", sweep_cfg.u_over_t_max, "Grid end (U/t)")
      ->capture_default_str();
  sweep_cmd->add_option("--steps", sweep_cfg.steps, "Number of grid points (inclusive)")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_cfg.out, "Output path")->required();
  sweep_cmd->add_option("--format", format, "csv or json")->capture_default_str();

  std::uint64_t verify_seed = 12345;
  std::string verify_config;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the oracle and invariant suites; nonzero exit on failure");
  verify_cmd->add_option("--seed", verify_seed, "RNG seed")->capture_default_str();
  verify_cmd->add_option("--config", verify_config, "Flat key=value config file; flags override it");

  try {
    std::vector<std::string> args = expand_config_args(argc, argv);
    std::reverse(args.begin(), args.end());  // the vector overload parses back to front
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }

  try {
    if (report_cmd->parsed()) {
      if (report_u_max_opt->count() > 0 && report_u_max != report_u_min) {
        std::cerr << "invalid input: report is a single point; --u-max must equal --u-min\n";
        return 2;
      }
      const double u_over_t = report_u_min;
      resolve_filling(report_args);
      corrgap::ModelParams params;
      params.sites = report_args.sites;
      params.t = report_args.t;
      params.u = u_over_t * report_args.t;
      params.n_up = report_args.n_up;
      params.n_down = report_args.n_down;
      corrgap::ReportOptions opts;
      opts.sector = parse_sector(report_args.sector);
      const corrgap::CorrelationReport rep = corrgap::correlation_report(params, opts);
      std::cout << report_to_json(rep, u_over_t).dump(2) << "\n";
      return 0;
    }

    if (sweep_cmd->parsed()) {
      resolve_filling(sweep_args);
      sweep_cfg.sites = sweep_args.sites;
      sweep_cfg.n_up = sweep_args.n_up;
      sweep_cfg.n_down = sweep_args.n_down;
      sweep_cfg.t = sweep_args.t;
      sweep_cfg.seed = sweep_args.seed;
      sweep_cfg.sector = parse_sector(sweep_args.sector);
      if (format == "csv") {
        sweep_cfg.format = corrgap::OutputFormat::csv;
      } else if (format == "json") {
        sweep_cfg.format = corrgap::OutputFormat::json;
      } else {
        std::cerr << "error: --format must be csv or json\n";
        return 2;
      }
      const auto rows = corrgap::run_sweep(sweep_cfg);
      int flagged = 0;
      for (const auto& row : rows) flagged += row.degenerate ? 1 : 0;
      std::cerr << "wrote " << rows.size() << " rows to " << sweep_cfg.out;
      if (flagged > 0) std::cerr << " (" << flagged << " degenerate points flagged)";
      std::cerr << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      corrgap::VerifyOptions opts;
      opts.seed = verify_seed;
      const auto results = corrgap::run_verification(opts);
      for (const auto& r : results) {
        std::printf("[%s] group %2d  %-55s margin % .3e  %s\n", r.passed ? "PASS" : "FAIL",
                    r.group, r.name.c_str(), r.margin, r.detail.c_str());
      }
      const bool ok = corrgap::all_passed(results);
      std::printf("%s: %zu checks\n", ok ? "ALL PASSED" : "FAILURES PRESENT", results.size());
      return ok ? 0 : 1;
    }
  } catch (const corrgap::DegeneracyError& e) {
    std::cerr << "degenerate ground state: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
