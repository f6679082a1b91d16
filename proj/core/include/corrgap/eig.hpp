#pragma once

#include "corrgap/matrix.hpp"

namespace corrgap {

struct EigenSystem {
  std::vector<double> values;  // ascending
  Matrix vectors;              // orthonormal columns, vectors.column(k) pairs with values[k]
};

// Hermitian eigensolver: cyclic complex Jacobi rotations.
// The input must be Hermitian to 1e-10 relative to its largest entry;
// it is symmetrized before iteration. Sweeps stop once the off-diagonal
// Frobenius norm drops below 1e-13 * ||A||_F (hard cap of 100 sweeps).
// Degenerate clusters are re-orthonormalized so the basis stays clean.
EigenSystem eigh(const Matrix& a);

}  // namespace corrgap
