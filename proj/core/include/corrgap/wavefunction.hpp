#pragma once

#include <string>

#include "corrgap/fock.hpp"
#include "corrgap/matrix.hpp"
#include "corrgap/symmetry.hpp"

namespace corrgap {

// Normalized state vector together with a tag naming the basis its
// amplitudes refer to. Overlaps between different tags are meaningless and
// rejected, so the tag travels with the amplitudes.
struct Wavefunction {
  std::string basis_tag;
  CVec amps;
};

std::string fock_tag(const FockBasis& basis);
std::string sector_tag(const FockBasis& basis, const SymmetryLabels& labels);

// Normalizes a copy of the amplitudes; rejects zero vectors.
Wavefunction make_wavefunction(std::string basis_tag, CVec amps);

}  // namespace corrgap
