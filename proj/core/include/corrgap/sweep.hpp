#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corrgap/measures.hpp"

namespace corrgap {

enum class OutputFormat { csv, json };

struct SweepConfig {
  int sites = 2;
  int n_up = 1;
  int n_down = 1;
  double t = 1.0;
  double u_over_t_min = 0.0;
  double u_over_t_max = 10.0;
  int steps = 11;                          // inclusive, uniformly spaced
  std::uint64_t seed = 0;                  // reserved for stochastic checks
  std::optional<SymmetryLabels> sector;    // unset = automatic ground sector
  std::string out;                         // empty = no file side effect
  OutputFormat format = OutputFormat::csv;
};

struct SweepRow {
  double u_over_t = 0.0;
  CorrelationReport report;
  bool degenerate = false;  // ground state was degenerate; numeric fields are NaN
};

// Runs the grid, flags degenerate points instead of aborting, and (when
// `out` is set) writes the table atomically: temp file in the target
// directory, then rename.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

// Schema (fixed order):
//   u_over_t,e_gs,e_es,e_hf,e_corr,e_gap,d_overlap,bound_ratio,entropy,
//   delta_l1,delta_over_2n,bound_meaningful
// Numbers carry 17 significant digits ('.' decimal point, ',' separator,
// LF line endings), booleans are true/false.
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string sweep_json(const std::vector<SweepRow>& rows);

void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace corrgap
