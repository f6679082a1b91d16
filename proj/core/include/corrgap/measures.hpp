#pragma once

#include <optional>
#include <stdexcept>

#include "corrgap/meanfield.hpp"
#include "corrgap/symmetry.hpp"
#include "corrgap/wavefunction.hpp"

namespace corrgap {

// Raised when a computation needs a unique sector ground state (or a finite
// gap) and the spectrum does not provide one.
struct DegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// D(a, b) = 1 - |<a|b>|^2. Both states must carry the same basis tag.
double overlap_distance(const Wavefunction& a, const Wavefunction& b);

struct OneRdm {
  Matrix rho;  // 2r x 2r, Hermitian, trace = particle number
};

OneRdm one_rdm(const Wavefunction& psi, const FockBasis& basis);

struct NaturalSpectrum {
  std::vector<double> occupations;  // descending, in [0, 1], sums to N
};

NaturalSpectrum natural_occupations(const OneRdm& rdm);

// Entropy of the natural occupations, S = -sum n ln n (natural logarithm,
// spectrum kept at trace N; zero occupations contribute nothing).
double von_neumann_entropy(const NaturalSpectrum& spectrum);

// l1 distance of the natural occupations from the closest idempotent
// spectrum (N ones, rest zeros): delta = sum_i |n_i - round-to-step(n_i)|
// with the N largest compared against 1 and the rest against 0.
struct OccupationDistance {
  double delta;
  double over_2n;  // delta / (2N)
  double over_2m;  // delta / (2M), M = min(N, d - N)
};

OccupationDistance occupation_distance(const NaturalSpectrum& spectrum, int n_particles);

// Eigenstate-overlap bound: for any normalized psi in the sector,
// |<gs|psi>|^2 >= (e_es - <psi|H|psi>) / (e_es - e_gs).
struct GapBoundCheck {
  double lhs;
  double rhs;
  bool holds;  // lhs >= rhs - 1e-10
};

GapBoundCheck check_gap_bound(const Wavefunction& psi, const Wavefunction& gs, double e_gs,
                              double e_es, const Matrix& h_block);

// Occupation bound against the best single determinant:
// delta / (2M) <= 1 - |<det|psi>|^2 for the maximal determinant overlap
// (any determinant overlap is a valid, weaker witness).
struct OccupationBoundCheck {
  double lhs;
  double rhs;
  bool holds;
};

OccupationBoundCheck check_occupation_bound(const NaturalSpectrum& spectrum,
                                            double det_overlap, int n_particles, int n_orbitals);

// Everything the toolkit reports for one parameter point. Energies carry the
// same units as t; d_overlap is computed against the mean-field determinant
// inside the ground-state sector.
struct CorrelationReport {
  ModelParams params;
  SymmetryLabels sector;
  double e_gs = 0.0;
  double e_es = 0.0;
  double e_hf = 0.0;
  double e_corr = 0.0;       // e_gs - e_hf (<= 0)
  double e_gap = 0.0;        // e_es - e_gs within the sector
  double d_overlap = 0.0;    // 1 - |<gs|hf>|^2
  double bound_ratio = 0.0;  // |e_corr| / e_gap
  double entropy = 0.0;
  double delta_l1 = 0.0;
  double delta_over_2n = 0.0;
  double delta_over_2m = 0.0;
  bool bound_meaningful = false;  // |e_corr| < e_gap
};

struct ReportOptions {
  // Sector to diagonalize in; unset means the sector holding the global
  // minimum of the particle-number block (ties broken toward larger m,
  // then larger p).
  std::optional<SymmetryLabels> sector;
};

CorrelationReport correlation_report(const ModelParams& params, const ReportOptions& opts = {});

}  // namespace corrgap
