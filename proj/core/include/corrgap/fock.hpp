#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace corrgap {

enum class Spin { up, down };

// One spin-orbital on a ring of r sites. The global orbital ordering used
// for fermionic signs is: up orbitals on sites 0..r-1 first, then down
// orbitals on sites 0..r-1 (global index r + site).
struct SpinOrbital {
  int site;
  Spin spin;
};

int orbital_index(const SpinOrbital& so, int sites);
SpinOrbital orbital_from_index(int index, int sites);

// Occupation-number state: one bit per site and spin species (bit i = site i).
// Comparison is lexicographic on (up, down) as unsigned integers, which is
// also the enumeration order of FockBasis.
struct FockState {
  std::uint32_t up = 0;
  std::uint32_t down = 0;
  friend auto operator<=>(const FockState&, const FockState&) = default;
};

enum class LadderKind { create, annihilate };

struct LadderResult {
  FockState state;
  int sign;  // +1 or -1, from the Jordan-Wigner string in the global ordering
};

// Apply c^dag (create) or c (annihilate) for the given spin-orbital.
// Returns nullopt when the operator kills the state (creating on an occupied
// orbital or annihilating an empty one).
std::optional<LadderResult> apply_ladder(const FockState& state, const SpinOrbital& so,
                                         LadderKind kind, int sites);

// All states with fixed particle numbers per species, in lexicographic order.
class FockBasis {
 public:
  FockBasis(int sites, int n_up, int n_down);

  int sites() const { return sites_; }
  int n_up() const { return n_up_; }
  int n_down() const { return n_down_; }
  int n_particles() const { return n_up_ + n_down_; }
  int n_orbitals() const { return 2 * sites_; }
  std::size_t size() const { return states_.size(); }

  const FockState& at(std::size_t k) const { return states_[k]; }
  const std::vector<FockState>& states() const { return states_; }

  std::size_t index(const FockState& s) const;                 // throws if absent
  std::optional<std::size_t> find(const FockState& s) const;   // nullopt if absent

 private:
  int sites_, n_up_, n_down_;
  std::vector<FockState> states_;
};

}  // namespace corrgap
