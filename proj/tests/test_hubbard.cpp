#include "doctest.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "corrgap/eig.hpp"
#include "corrgap/hubbard.hpp"

using namespace corrgap;

namespace {

// Independent one-particle oracle: the hopping matrix on the ring (same bond
// convention: a 2-site ring has a single bond), filled species by species.
double free_fermion_ground_energy(int r, double t, int n_up, int n_down) {
  Matrix one_body(r, r);
  for (const auto& [i, j] : ring_bonds(r)) {
    one_body(i, j) += -0.5 * t;
    one_body(j, i) += -0.5 * t;
  }
  std::vector<double> levels = eigh(one_body).values;
  std::sort(levels.begin(), levels.end());
  double e = 0.0;
  for (int k = 0; k < n_up; ++k) e += levels[k];
  for (int k = 0; k < n_down; ++k) e += levels[k];
  return e;
}

}  // namespace

TEST_CASE("bond list: single bond at r=2, periodic ring otherwise") {
  CHECK(ring_bonds(2) == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(ring_bonds(3) == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
  CHECK(ring_bonds(4).size() == 4);
}

TEST_CASE("half-filled 2-site matrix is the known 4x4") {
  const double u = 0.8, t = 1.3;
  const FockBasis basis(2, 1, 1);
  const Matrix h = build_hamiltonian(ModelParams{2, t, u, 1, 1}, basis);

  // basis order: (01,01), (01,10), (10,01), (10,10)
  const double x = -0.5 * t;
  const double expected[4][4] = {
      {2.0 * u, x, x, 0.0},
      {x, 0.0, 0.0, x},
      {x, 0.0, 0.0, x},
      {0.0, x, x, 2.0 * u},
  };
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(std::abs(h(i, j) - expected[i][j]) < 1e-14);
    }
  }
}

TEST_CASE("zero hopping leaves the doublon-counting diagonal") {
  const FockBasis basis(3, 2, 1);
  const Matrix h = build_hamiltonian(ModelParams{3, 0.0, 1.7, 2, 1}, basis);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const FockState& s = basis.at(i);
    const int doublons = std::popcount(s.up & s.down);
    CHECK(std::abs(h(i, i) - 2.0 * 1.7 * doublons) < 1e-14);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i != j) CHECK(std::abs(h(i, j)) == 0.0);
    }
  }
}

TEST_CASE("free fermions: block ground energy equals filled one-particle levels") {
  for (const auto& [r, nu, nd] : {std::tuple{2, 1, 1}, {3, 2, 1}, {3, 1, 1}, {4, 2, 2}}) {
    const double t = 1.4;
    const FockBasis basis(r, nu, nd);
    const Matrix h = build_hamiltonian(ModelParams{r, t, 0.0, nu, nd}, basis);
    const double e_exact = eigh(h).values.front();
    const double e_free = free_fermion_ground_energy(r, t, nu, nd);
    CHECK(std::abs(e_exact - e_free) < 1e-12);
  }
}

TEST_CASE("assembled blocks are Hermitian for random parameters") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int trial = 0; trial < 5; ++trial) {
    const double u = dist(rng);
    const double t = std::abs(dist(rng)) + 0.1;
    const FockBasis basis(4, 2, 1);
    const Matrix h = build_hamiltonian(ModelParams{4, t, u, 2, 1}, basis);
    CHECK(h.hermiticity_defect() < 1e-14);
  }
}

TEST_CASE("sector projection") {
  const double u = 0.9, t = 1.0;
  const FockBasis basis(2, 1, 1);
  const Matrix h = build_hamiltonian(ModelParams{2, t, u, 1, 1}, basis);

  SUBCASE("projecting onto the full standard basis reproduces the matrix") {
    std::vector<CVec> full;
    for (std::size_t i = 0; i < 4; ++i) {
      CVec e(4, cplx(0.0, 0.0));
      e[i] = 1.0;
      full.push_back(e);
    }
    const Matrix p = project_to_sector(h, full);
    CHECK((p - h).max_abs() < 1e-14);
  }

  SUBCASE("the symmetric two-dimensional subspace gives the singlet block") {
    const double inv = 1.0 / std::sqrt(2.0);
    CVec ionic(4, cplx(0.0, 0.0)), covalent(4, cplx(0.0, 0.0));
    ionic[0] = inv;     // (01,01)
    ionic[3] = inv;     // (10,10)
    covalent[1] = inv;  // (01,10)
    covalent[2] = inv;  // (10,01)
    const Matrix block = project_to_sector(h, {ionic, covalent});
    CHECK(std::abs(block(0, 0) - 2.0 * u) < 1e-14);
    CHECK(std::abs(block(1, 1) - 0.0) < 1e-14);
    CHECK(std::abs(block(0, 1) + t) < 1e-14);
    CHECK(std::abs(block(1, 0) + t) < 1e-14);

    const EigenSystem es = eigh(block);
    const double root = std::sqrt(u * u + t * t);
    CHECK(std::abs(es.values[0] - (u - root)) < 1e-13);
    CHECK(std::abs(es.values[1] - (u + root)) < 1e-13);
  }

  SUBCASE("non-orthonormal vectors are rejected") {
    CVec a(4, cplx(0.5, 0.0));
    CVec b(4, cplx(0.0, 0.0));
    b[0] = 1.0;
    CHECK_THROWS_AS(project_to_sector(h, {a, b}), std::invalid_argument);
  }
}

TEST_CASE("domain errors") {
  const FockBasis basis(2, 1, 1);
  CHECK_THROWS_AS(build_hamiltonian(ModelParams{3, 1.0, 0.0, 1, 1}, basis),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian(ModelParams{2, -1.0, 0.0, 1, 1}, basis),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian(ModelParams{2, 1.0, 0.0, 3, 1}, basis),
                  std::invalid_argument);
}
