#include "corrgap/fock.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace corrgap {

namespace {

void check_sites(int sites) {
  if (sites < 1 || sites > 32) throw std::invalid_argument("sites must be in [1, 32]");
}

// Occupied orbitals with global index below `index`, i.e. the length of the
// Jordan-Wigner string the operator has to cross.
int string_length(const FockState& s, int index, int sites) {
  const std::uint32_t up_mask = (index >= sites)
                                    ? ~std::uint32_t(0)
                                    : ((std::uint32_t(1) << index) - 1);
  int count = std::popcount(s.up & up_mask);
  if (index > sites) {
    const std::uint32_t down_mask = (std::uint32_t(1) << (index - sites)) - 1;
    count += std::popcount(s.down & down_mask);
  }
  return count;
}

// Next larger integer with the same popcount (Gosper's hack).
std::uint32_t next_combination(std::uint32_t v) {
  const std::uint32_t t = v | (v - 1);
  return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

std::vector<std::uint32_t> combinations(int sites, int count) {
  std::vector<std::uint32_t> out;
  if (count == 0) {
    out.push_back(0);
    return out;
  }
  std::uint32_t v = (count == 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << count) - 1);
  const std::uint32_t limit = (sites == 32) ? ~std::uint32_t(0)
                                            : ((std::uint32_t(1) << sites) - 1);
  while (true) {
    out.push_back(v);
    if (v == (limit & ~((std::uint32_t(1) << (sites - count)) - 1))) break;
    v = next_combination(v);
    if (v > limit) break;
  }
  return out;
}

}  // namespace

int orbital_index(const SpinOrbital& so, int sites) {
  check_sites(sites);
  if (so.site < 0 || so.site >= sites) throw std::invalid_argument("site out of range");
  return (so.spin == Spin::up) ? so.site : sites + so.site;
}

SpinOrbital orbital_from_index(int index, int sites) {
  check_sites(sites);
  if (index < 0 || index >= 2 * sites) throw std::invalid_argument("orbital index out of range");
  if (index < sites) return {index, Spin::up};
  return {index - sites, Spin::down};
}

std::optional<LadderResult> apply_ladder(const FockState& state, const SpinOrbital& so,
                                         LadderKind kind, int sites) {
  const int idx = orbital_index(so, sites);
  const std::uint32_t bit = std::uint32_t(1) << so.site;
  const bool occupied = (so.spin == Spin::up) ? (state.up & bit) : (state.down & bit);

  if (kind == LadderKind::create && occupied) return std::nullopt;
  if (kind == LadderKind::annihilate && !occupied) return std::nullopt;

  LadderResult r;
  r.state = state;
  if (so.spin == Spin::up) {
    r.state.up ^= bit;
  } else {
    r.state.down ^= bit;
  }
  r.sign = (string_length(state, idx, sites) % 2 == 0) ? 1 : -1;
  return r;
}

FockBasis::FockBasis(int sites, int n_up, int n_down)
    : sites_(sites), n_up_(n_up), n_down_(n_down) {
  check_sites(sites);
  if (n_up < 0 || n_up > sites || n_down < 0 || n_down > sites) {
    throw std::invalid_argument("particle counts must be in [0, sites]");
  }
  const auto ups = combinations(sites, n_up);
  const auto downs = combinations(sites, n_down);
  states_.reserve(ups.size() * downs.size());
  for (const auto u : ups) {
    for (const auto d : downs) states_.push_back({u, d});
  }
  // combinations() emits ascending values, so states_ is already sorted
  // lexicographically on (up, down); index() relies on this.
}

std::size_t FockBasis::index(const FockState& s) const {
  const auto found = find(s);
  if (!found) throw std::out_of_range("state not in basis");
  return *found;
}

std::optional<std::size_t> FockBasis::find(const FockState& s) const {
  const auto it = std::lower_bound(states_.begin(), states_.end(), s);
  if (it == states_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

}  // namespace corrgap
