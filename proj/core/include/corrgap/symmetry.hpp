#pragma once

#include "corrgap/fock.hpp"
#include "corrgap/hubbard.hpp"
#include "corrgap/matrix.hpp"

namespace corrgap {

// Simultaneous quantum numbers of a symmetry sector:
//   s  total spin (S^2 eigenvalue s(s+1)),
//   m  spin projection (fixed by the particle counts),
//   p  translation label in 0..r-1; the translation eigenvalue is
//      exp(+2*pi*i*p/r). For r = 2 that is +1 (p = 0) or -1 (p = 1).
struct SymmetryLabels {
  double s = 0.0;
  double m = 0.0;
  int p = 0;
};

bool same_labels(const SymmetryLabels& a, const SymmetryLabels& b);

struct SectorBasis {
  SymmetryLabels labels;
  std::vector<CVec> vectors;  // orthonormal simultaneous eigenvectors of S^2, Sz, T
};

struct Sector {
  SectorBasis basis;
  Matrix block;  // H restricted to the sector
};

// One-step ring translation (site i -> i+1 mod r) as a signed permutation on
// the Fock basis. A fermion wrapping from site r-1 to site 0 crosses the rest
// of its own species, giving a factor (-1)^(k-1) for k particles of that spin.
Matrix build_translation(const FockBasis& basis);

struct SpinOperators {
  Matrix sz;
  Matrix s2;  // built as S+^dag S+ + Sz^2 + Sz via the (n_up+1, n_down-1) block
};

SpinOperators build_spin_operators(const FockBasis& basis);

// Split a particle-number block into simultaneous (S^2, Sz, T) sectors and
// project H onto each. Checks first that H commutes with all three operators,
// and afterwards that the sector dimensions add up to the block dimension and
// the combined vectors form an orthonormal set. Sectors come back sorted by
// (s, m, p).
std::vector<Sector> decompose_sectors(const Matrix& h, const Matrix& t_op, const Matrix& sz,
                                      const Matrix& s2, int sites);

}  // namespace corrgap
