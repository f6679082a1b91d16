#pragma once

#include <cstdint>
#include <optional>

#include "corrgap/hubbard.hpp"
#include "corrgap/wavefunction.hpp"

namespace corrgap {

// N orthonormal single-particle orbitals over the 2r spin-orbitals
// (rows follow the global ordering: up sites 0..r-1, then down sites).
struct SlaterDeterminant {
  Matrix orbitals;  // 2r x N, orthonormal columns
};

struct RhfResult {
  SlaterDeterminant det;
  double energy;
};

// Restricted mean-field reference: both species fill the same plane-wave
// orbitals phi_q(k) = exp(-2*pi*i*q*k/r)/sqrt(r), lowest band energies
// eps_q = -t cos(2*pi*q/r) first. Requires n_up == n_down or
// n_up == n_down + 1; with an open shell or a partially filled degenerate
// level the filling is ambiguous and a sector hint (total momentum
// sum of q mod r == hint.p) is needed to pin it down.
RhfResult rhf_state(const ModelParams& params, std::optional<SymmetryLabels> sector_hint,
                    const FockBasis& basis, const Matrix& h);
RhfResult rhf_state(const ModelParams& params,
                    std::optional<SymmetryLabels> sector_hint = std::nullopt);

// Expand a determinant over the Fock basis: each amplitude is the N x N
// minor of the orbital matrix on the occupied rows. The result is checked to
// be normalized and then normalized exactly.
Wavefunction determinant_to_wavefunction(const SlaterDeterminant& det, const FockBasis& basis);

struct OverlapSearchOptions {
  int restarts = 16;
  int iters = 500;
  std::uint64_t seed = 0;
  double initial_step = 0.3;
};

struct MaxOverlapResult {
  SlaterDeterminant det;
  double overlap;  // |<det|psi>|, best found
};

// Stochastic search for the determinant with maximal overlap against psi:
// random unitary kicks exp(i*step*G) on the orbitals, step halved on
// rejection, fresh restarts from the mean-field reference and random
// orthonormal frames. The search stays inside spin-conserving determinants
// (each orbital purely up or down), the class the particle-number block
// supports; any determinant overlap is a valid witness for the occupation
// bounds, a restricted optimum just makes them weaker. Deterministic for a
// fixed seed, and adding restarts never lowers the reported overlap.
MaxOverlapResult max_overlap_determinant(const Wavefunction& psi, const FockBasis& basis,
                                         const ModelParams& params,
                                         const OverlapSearchOptions& opts = {});

}  // namespace corrgap
