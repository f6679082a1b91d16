#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "corrgap/eig.hpp"
#include "corrgap/symmetry.hpp"

using namespace corrgap;

namespace {

std::vector<double> sorted_eigenvalues(const Matrix& m) {
  return eigh(m).values;  // already ascending
}

std::map<std::pair<double, int>, std::size_t> sector_dims(const std::vector<Sector>& sectors) {
  std::map<std::pair<double, int>, std::size_t> dims;
  for (const auto& s : sectors) {
    dims[{s.basis.labels.s, s.basis.labels.p}] = s.basis.vectors.size();
  }
  return dims;
}

}  // namespace

TEST_CASE("translation on the half-filled 2-site block is the site swap") {
  const FockBasis basis(2, 1, 1);
  const Matrix t = build_translation(basis);
  // states: (01,01) (01,10) (10,01) (10,10); swap exchanges 0<->3 and 1<->2
  const std::size_t expect[4] = {3, 2, 1, 0};
  for (std::size_t col = 0; col < 4; ++col) {
    for (std::size_t row = 0; row < 4; ++row) {
      const double want = (row == expect[col]) ? 1.0 : 0.0;
      CHECK(std::abs(t(row, col) - want) < 1e-15);
    }
  }

  // symmetric covalent combination has translation eigenvalue +1
  CVec v(4, cplx(0.0, 0.0));
  v[1] = v[2] = 1.0 / std::sqrt(2.0);
  const CVec tv = t * v;
  CHECK(std::abs(inner(v, tv) - cplx(1.0, 0.0)) < 1e-14);
}

TEST_CASE("translation to the ring power is the identity") {
  for (const auto& [r, nu, nd] : {std::tuple{2, 1, 1}, {3, 2, 1}, {3, 1, 1}, {4, 2, 2}}) {
    const FockBasis basis(r, nu, nd);
    const Matrix t = build_translation(basis);
    Matrix power = Matrix::identity(basis.size());
    for (int k = 0; k < r; ++k) power = t * power;
    CHECK((power - Matrix::identity(basis.size())).max_abs() < 1e-14);
  }
}

TEST_CASE("spin operators: eigenvalue inventory") {
  SUBCASE("half-filled 2-site block: three singlets and the m=0 triplet member") {
    const SpinOperators ops = build_spin_operators(FockBasis(2, 1, 1));
    const auto vals = sorted_eigenvalues(ops.s2);
    CHECK(std::abs(vals[0] - 0.0) < 1e-12);
    CHECK(std::abs(vals[1] - 0.0) < 1e-12);
    CHECK(std::abs(vals[2] - 0.0) < 1e-12);
    CHECK(std::abs(vals[3] - 2.0) < 1e-12);
  }

  SUBCASE("polarized 2-site blocks each carry one triplet member") {
    for (const auto& [nu, nd] : {std::pair{2, 0}, {0, 2}}) {
      const SpinOperators ops = build_spin_operators(FockBasis(2, nu, nd));
      CHECK(std::abs(std::real(ops.s2(0, 0)) - 2.0) < 1e-12);
    }
  }

  SUBCASE("3-site (2,1) block: eight doublet states and one quartet state") {
    const SpinOperators ops = build_spin_operators(FockBasis(3, 2, 1));
    const auto vals = sorted_eigenvalues(ops.s2);
    for (int i = 0; i < 8; ++i) CHECK(std::abs(vals[i] - 0.75) < 1e-12);
    CHECK(std::abs(vals[8] - 3.75) < 1e-12);
  }

  SUBCASE("operators commute with each other and with translation") {
    const FockBasis basis(3, 2, 1);
    const SpinOperators ops = build_spin_operators(basis);
    const Matrix t = build_translation(basis);
    CHECK(commutator(ops.s2, ops.sz).max_abs() < 1e-13);
    CHECK(commutator(ops.s2, t).max_abs() < 1e-13);
  }
}

TEST_CASE("sector decomposition of the half-filled 2-site block") {
  const double u = 1.1, t = 1.0;
  const FockBasis basis(2, 1, 1);
  const Matrix h = build_hamiltonian(ModelParams{2, t, u, 1, 1}, basis);
  const Matrix t_op = build_translation(basis);
  const SpinOperators spin = build_spin_operators(basis);
  const auto sectors = decompose_sectors(h, t_op, spin.sz, spin.s2, 2);

  REQUIRE(sectors.size() == 3);
  const auto dims = sector_dims(sectors);
  CHECK(dims.at({0.0, 0}) == 2);
  CHECK(dims.at({0.0, 1}) == 1);
  CHECK(dims.at({1.0, 1}) == 1);

  for (const auto& sec : sectors) {
    const auto& lab = sec.basis.labels;
    if (lab.s == 0.0 && lab.p == 0) {
      // gauge-invariant facts about the 2x2 block
      const auto vals = eigh(sec.block).values;
      const double root = std::sqrt(u * u + t * t);
      CHECK(std::abs(vals[0] - (u - root)) < 1e-12);
      CHECK(std::abs(vals[1] - (u + root)) < 1e-12);
      CHECK(std::abs(std::real(sec.block(0, 0) + sec.block(1, 1)) - 2.0 * u) < 1e-12);
    } else if (lab.s == 0.0 && lab.p == 1) {
      CHECK(std::abs(sec.block(0, 0) - 2.0 * u) < 1e-12);
    } else {
      CHECK(std::abs(sec.block(0, 0)) < 1e-12);
    }
    CHECK(std::abs(lab.m) < 1e-12);
  }
}

TEST_CASE("sector decomposition of the 3-site (2,1) block") {
  const FockBasis basis(3, 2, 1);
  for (const double u : {1.0, -4.0}) {
    const Matrix h = build_hamiltonian(ModelParams{3, 1.0, u, 2, 1}, basis);
    const Matrix t_op = build_translation(basis);
    const SpinOperators spin = build_spin_operators(basis);
    const auto sectors = decompose_sectors(h, t_op, spin.sz, spin.s2, 3);

    REQUIRE(sectors.size() == 4);
    const auto dims = sector_dims(sectors);
    CHECK(dims.at({0.5, 0}) == 2);
    CHECK(dims.at({0.5, 1}) == 3);
    CHECK(dims.at({0.5, 2}) == 3);
    CHECK(dims.at({1.5, 0}) == 1);

    std::size_t total = 0;
    for (const auto& sec : sectors) total += sec.basis.vectors.size();
    CHECK(total == basis.size());

    for (const auto& sec : sectors) {
      const auto& lab = sec.basis.labels;
      CHECK(std::abs(lab.m - 0.5) < 1e-12);
      if (lab.s == 1.5) {
        // the quartet state carries no hopping or interaction energy
        CHECK(std::abs(sec.block(0, 0)) < 1e-12);
      }
      if (lab.s == 0.5 && lab.p == 0) {
        // this two-dimensional sector is 2U times the identity
        CHECK(std::abs(sec.block(0, 0) - 2.0 * u) < 1e-12);
        CHECK(std::abs(sec.block(1, 1) - 2.0 * u) < 1e-12);
        CHECK(std::abs(sec.block(0, 1)) < 1e-12);
      }
    }

    // momentum partners p=1 and p=2 have identical spectra
    const auto* p1 = &sectors[1];
    const auto* p2 = &sectors[2];
    REQUIRE(p1->basis.labels.p == 1);
    REQUIRE(p2->basis.labels.p == 2);
    const auto v1 = eigh(p1->block).values;
    const auto v2 = eigh(p2->block).values;
    for (std::size_t i = 0; i < v1.size(); ++i) CHECK(std::abs(v1[i] - v2[i]) < 1e-10);
  }
}

TEST_CASE("decompose rejects operators that do not commute") {
  const FockBasis basis(2, 1, 1);
  Matrix h(4, 4);
  h(0, 0) = 1.0;
  h(1, 1) = 2.0;
  h(2, 2) = 3.0;
  h(3, 3) = 4.0;  // breaks translation symmetry
  const Matrix t_op = build_translation(basis);
  const SpinOperators spin = build_spin_operators(basis);
  CHECK_THROWS_AS(decompose_sectors(h, t_op, spin.sz, spin.s2, 2), std::logic_error);
}
