#pragma once

#include "corrgap/fock.hpp"
#include "corrgap/matrix.hpp"

namespace corrgap {

// Ring Hubbard model with Hamiltonian
//   H = -(t/2) sum_{<ij>,s} (c^dag_{is} c_{js} + h.c.) + 2U sum_i n_{i up} n_{i down}
// Bonds are nearest neighbours on the ring: a 2-site ring has the single
// bond 0-1 (no doubled wraparound), larger rings close periodically.
struct ModelParams {
  int sites = 2;
  double t = 1.0;
  double u = 0.0;
  int n_up = 1;
  int n_down = 1;

  void validate() const;  // sites >= 2, t >= 0, counts in [0, sites]
};

std::vector<std::pair<int, int>> ring_bonds(int sites);

Matrix build_hamiltonian(const ModelParams& params, const FockBasis& basis);

// B^dag H B for orthonormal sector vectors B (columns). Vectors must be
// orthonormal to 1e-10 or the call is rejected.
Matrix project_to_sector(const Matrix& h, const std::vector<CVec>& sector_vectors);

}  // namespace corrgap
