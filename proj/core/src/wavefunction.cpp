#include "corrgap/wavefunction.hpp"

#include <sstream>
#include <stdexcept>

namespace corrgap {

std::string fock_tag(const FockBasis& basis) {
  std::ostringstream os;
  os << "fock:r" << basis.sites() << ":n" << basis.n_up() << "," << basis.n_down();
  return os.str();
}

std::string sector_tag(const FockBasis& basis, const SymmetryLabels& labels) {
  std::ostringstream os;
  os << fock_tag(basis) << ":s" << labels.s << ":m" << labels.m << ":p" << labels.p;
  return os.str();
}

Wavefunction make_wavefunction(std::string basis_tag, CVec amps) {
  if (basis_tag.empty()) throw std::invalid_argument("wavefunction needs a basis tag");
  if (amps.empty()) throw std::invalid_argument("wavefunction needs amplitudes");
  normalize(amps);
  return Wavefunction{std::move(basis_tag), std::move(amps)};
}

}  // namespace corrgap
