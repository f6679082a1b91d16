#include "corrgap/hubbard.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace corrgap {

void ModelParams::validate() const {
  if (sites < 2 || sites > 32) throw std::invalid_argument("sites must be in [2, 32]");
  if (t < 0.0) throw std::invalid_argument("hopping t must be non-negative");
  if (n_up < 0 || n_up > sites || n_down < 0 || n_down > sites) {
    throw std::invalid_argument("particle counts must be in [0, sites]");
  }
}

std::vector<std::pair<int, int>> ring_bonds(int sites) {
  if (sites < 2) throw std::invalid_argument("ring needs at least 2 sites");
  if (sites == 2) return {{0, 1}};
  std::vector<std::pair<int, int>> bonds;
  bonds.reserve(sites);
  for (int i = 0; i < sites; ++i) bonds.emplace_back(i, (i + 1) % sites);
  return bonds;
}

Matrix build_hamiltonian(const ModelParams& params, const FockBasis& basis) {
  params.validate();
  if (basis.sites() != params.sites || basis.n_up() != params.n_up ||
      basis.n_down() != params.n_down) {
    throw std::invalid_argument("basis does not match model parameters");
  }

  const int r = params.sites;
  const std::size_t dim = basis.size();
  const auto bonds = ring_bonds(r);
  Matrix h(dim, dim);

  for (std::size_t k = 0; k < dim; ++k) {
    const FockState& s = basis.at(k);
    h(k, k) += 2.0 * params.u * std::popcount(s.up & s.down);

    for (const auto& [i, j] : bonds) {
      for (const Spin spin : {Spin::up, Spin::down}) {
        // c^dag_a c_b for both bond directions.
        for (const auto& [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
          const auto killed = apply_ladder(s, {b, spin}, LadderKind::annihilate, r);
          if (!killed) continue;
          const auto created = apply_ladder(killed->state, {a, spin}, LadderKind::create, r);
          if (!created) continue;
          const std::size_t row = basis.index(created->state);
          h(row, k) += -0.5 * params.t * killed->sign * created->sign;
        }
      }
    }
  }

  if (h.hermiticity_defect() > 1e-12 * std::max(1.0, h.max_abs())) {
    throw std::logic_error("assembled Hamiltonian is not Hermitian");
  }
  return h;
}

Matrix project_to_sector(const Matrix& h, const std::vector<CVec>& sector_vectors) {
  if (sector_vectors.empty()) throw std::invalid_argument("sector has no vectors");
  const std::size_t dim = h.rows();
  if (h.cols() != dim) throw std::invalid_argument("project_to_sector: H not square");
  for (const auto& v : sector_vectors) {
    if (v.size() != dim) throw std::invalid_argument("sector vector has wrong length");
  }

  const std::size_t m = sector_vectors.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const cplx g = inner(sector_vectors[i], sector_vectors[j]);
      const cplx expect = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      if (std::abs(g - expect) > 1e-10) {
        throw std::invalid_argument("sector vectors are not orthonormal");
      }
    }
  }

  Matrix block(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const CVec hv = h * sector_vectors[j];
    for (std::size_t i = 0; i < m; ++i) block(i, j) = inner(sector_vectors[i], hv);
  }
  return block.hermitian_part();
}

}  // namespace corrgap
