#include "corrgap/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "corrgap/eig.hpp"

namespace corrgap {

namespace {

constexpr double kClusterTol = 1e-8;
constexpr double kResidualTol = 1e-9;

// Rotate the occupation word of one species by one site. The wrapping
// particle crosses k-1 others of the same species.
std::pair<std::uint32_t, int> rotate_species(std::uint32_t bits, int sites) {
  const std::uint32_t top = std::uint32_t(1) << (sites - 1);
  const std::uint32_t mask = (sites == 32) ? ~std::uint32_t(0)
                                           : ((std::uint32_t(1) << sites) - 1);
  const bool wraps = bits & top;
  std::uint32_t rotated = ((bits << 1) & mask) | (wraps ? 1u : 0u);
  int sign = 1;
  if (wraps) {
    const int k = std::popcount(bits);
    sign = (k % 2 == 0) ? -1 : 1;  // (-1)^(k-1)
  }
  return {rotated, sign};
}

// Contiguous clusters of an ascending value list; rejects chains whose total
// spread is far beyond the gap tolerance (ambiguous clustering).
std::vector<std::pair<std::size_t, std::size_t>> cluster_ranges(const std::vector<double>& vals,
                                                                double tol) {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t lo = 0;
  for (std::size_t k = 1; k <= vals.size(); ++k) {
    if (k == vals.size() || vals[k] - vals[k - 1] > tol) {
      if (vals[k - 1] - vals[lo] > 10.0 * tol) {
        throw std::runtime_error("eigenvalue clustering is ambiguous (near-degenerate chain)");
      }
      ranges.emplace_back(lo, k);
      lo = k;
    }
  }
  return ranges;
}

Matrix column_slice(const Matrix& m, std::size_t lo, std::size_t hi) {
  Matrix out(m.rows(), hi - lo);
  for (std::size_t j = lo; j < hi; ++j) out.set_column(j - lo, m.column(j));
  return out;
}

double round_half_integer(double x) { return std::round(2.0 * x) / 2.0; }

void check_commutes(const Matrix& h, const Matrix& op, const char* name) {
  const double bound = 1e-10 * std::max(1.0, h.max_abs()) * std::max(1.0, op.max_abs());
  if (commutator(h, op).max_abs() > bound) {
    throw std::logic_error(std::string("Hamiltonian does not commute with ") + name);
  }
}

}  // namespace

bool same_labels(const SymmetryLabels& a, const SymmetryLabels& b) {
  return std::abs(a.s - b.s) < 0.25 && std::abs(a.m - b.m) < 0.25 && a.p == b.p;
}

Matrix build_translation(const FockBasis& basis) {
  const int r = basis.sites();
  const std::size_t dim = basis.size();
  Matrix t(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const FockState& s = basis.at(k);
    const auto [up, up_sign] = rotate_species(s.up, r);
    const auto [down, down_sign] = rotate_species(s.down, r);
    const std::size_t row = basis.index({up, down});
    t(row, k) = double(up_sign * down_sign);
  }
  return t;
}

SpinOperators build_spin_operators(const FockBasis& basis) {
  const int r = basis.sites();
  const std::size_t dim = basis.size();

  SpinOperators ops{Matrix(dim, dim), Matrix(dim, dim)};
  for (std::size_t k = 0; k < dim; ++k) {
    ops.sz(k, k) = 0.5 * (basis.n_up() - basis.n_down());
  }

  // S^2 = S+^dag S+ + Sz^2 + Sz, with S+ = sum_i c^dag_{i up} c_{i down}
  // mapping into the (n_up+1, n_down-1) block.
  Matrix s2(dim, dim);
  if (basis.n_down() >= 1 && basis.n_up() + 1 <= r) {
    const FockBasis raised(r, basis.n_up() + 1, basis.n_down() - 1);
    Matrix splus(raised.size(), dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const FockState& s = basis.at(k);
      for (int i = 0; i < r; ++i) {
        const auto killed = apply_ladder(s, {i, Spin::down}, LadderKind::annihilate, r);
        if (!killed) continue;
        const auto created = apply_ladder(killed->state, {i, Spin::up}, LadderKind::create, r);
        if (!created) continue;
        splus(raised.index(created->state), k) += double(killed->sign * created->sign);
      }
    }
    s2 = splus.adjoint() * splus;
  }
  const double m = 0.5 * (basis.n_up() - basis.n_down());
  for (std::size_t k = 0; k < dim; ++k) s2(k, k) += m * m + m;
  ops.s2 = s2;
  return ops;
}

std::vector<Sector> decompose_sectors(const Matrix& h, const Matrix& t_op, const Matrix& sz,
                                      const Matrix& s2, int sites) {
  const std::size_t dim = h.rows();
  for (const Matrix* m : {&h, &t_op, &sz, &s2}) {
    if (m->rows() != dim || m->cols() != dim) {
      throw std::invalid_argument("decompose_sectors: operator shapes differ");
    }
  }
  check_commutes(h, t_op, "translation");
  check_commutes(h, sz, "Sz");
  check_commutes(h, s2, "S^2");
  check_commutes(s2, t_op, "translation (S^2)");

  // Sz is diagonal within a particle-number block.
  std::vector<double> mvals(dim);
  for (std::size_t i = 0; i < dim; ++i) mvals[i] = std::real(sz(i, i));
  const double m_lo = *std::min_element(mvals.begin(), mvals.end());
  const double m_hi = *std::max_element(mvals.begin(), mvals.end());
  if (m_hi - m_lo > kClusterTol) {
    throw std::invalid_argument("decompose_sectors: Sz is not constant on the block");
  }
  const double m_label = round_half_integer(0.5 * (m_lo + m_hi));

  std::vector<Sector> sectors;

  // Total-spin split first.
  const EigenSystem spin_eig = eigh(s2);
  const auto spin_clusters = cluster_ranges(spin_eig.values, kClusterTol);
  for (const auto& [s_lo, s_hi] : spin_clusters) {
    const double ev = spin_eig.values[s_lo];
    const double s_label = round_half_integer(0.5 * (-1.0 + std::sqrt(std::max(0.0, 1.0 + 4.0 * ev))));
    if (std::abs(s_label * (s_label + 1.0) - ev) > 1e-6) {
      throw std::runtime_error("S^2 eigenvalue is not of the form s(s+1)");
    }
    const Matrix w_spin = column_slice(spin_eig.vectors, s_lo, s_hi);

    // Translation restricted to the spin block is unitary; split it through
    // its Hermitian and anti-Hermitian parts (cos then sin of the phase).
    const Matrix t_w = w_spin.adjoint() * (t_op * w_spin);
    const Matrix re_part = (t_w + t_w.adjoint()).scaled(0.5);
    const EigenSystem re_eig = eigh(re_part);
    const auto re_clusters = cluster_ranges(re_eig.values, kClusterTol);
    for (const auto& [c_lo, c_hi] : re_clusters) {
      const Matrix w_cos = w_spin * column_slice(re_eig.vectors, c_lo, c_hi);
      const Matrix t_c = w_cos.adjoint() * (t_op * w_cos);
      const Matrix im_part = (t_c - t_c.adjoint()).scaled(cplx(0.0, -0.5));
      const EigenSystem im_eig = eigh(im_part);
      const auto im_clusters = cluster_ranges(im_eig.values, kClusterTol);
      for (const auto& [i_lo, i_hi] : im_clusters) {
        const Matrix w_final = w_cos * column_slice(im_eig.vectors, i_lo, i_hi);

        Sector sector;
        sector.basis.labels.s = s_label;
        sector.basis.labels.m = m_label;

        int p_label = -1;
        for (std::size_t j = 0; j < w_final.cols(); ++j) {
          CVec v = w_final.column(j);
          normalize(v);
          const CVec tv = t_op * v;
          const cplx phase = inner(v, tv);
          const double angle = std::arg(phase);
          int p = int(std::lround(angle * sites / (2.0 * std::numbers::pi))) % sites;
          if (p < 0) p += sites;
          if (p_label < 0) p_label = p;
          if (p != p_label) {
            throw std::runtime_error("translation labels disagree within a sector");
          }

          // Residual checks: the vector must be a genuine simultaneous
          // eigenvector of all three symmetry operators.
          const cplx lambda = std::polar(1.0, 2.0 * std::numbers::pi * p / sites);
          double res_t = 0.0, res_s = 0.0, res_z = 0.0;
          const CVec s2v = s2 * v;
          const CVec szv = sz * v;
          for (std::size_t i = 0; i < v.size(); ++i) {
            res_t += std::norm(tv[i] - lambda * v[i]);
            res_s += std::norm(s2v[i] - s_label * (s_label + 1.0) * v[i]);
            res_z += std::norm(szv[i] - m_label * v[i]);
          }
          const double s2_scale = std::max(1.0, s2.max_abs());
          if (std::sqrt(res_t) > kResidualTol || std::sqrt(res_z) > kResidualTol ||
              std::sqrt(res_s) > kResidualTol * s2_scale) {
            throw std::runtime_error("sector vector fails simultaneous-eigenvector residuals");
          }
          sector.basis.vectors.push_back(std::move(v));
        }
        sector.basis.labels.p = p_label;
        sector.block = project_to_sector(h, sector.basis.vectors);
        sectors.push_back(std::move(sector));
      }
    }
  }

  std::size_t total = 0;
  std::vector<CVec> all;
  for (const auto& sec : sectors) {
    total += sec.basis.vectors.size();
    all.insert(all.end(), sec.basis.vectors.begin(), sec.basis.vectors.end());
  }
  if (total != dim) throw std::logic_error("sector dimensions do not add up to the block dimension");
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      const cplx g = inner(all[i], all[j]);
      const cplx expect = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      if (std::abs(g - expect) > 1e-10) {
        throw std::logic_error("sector vectors are not jointly orthonormal");
      }
    }
  }

  std::sort(sectors.begin(), sectors.end(), [](const Sector& a, const Sector& b) {
    const auto& x = a.basis.labels;
    const auto& y = b.basis.labels;
    if (x.s != y.s) return x.s < y.s;
    if (x.m != y.m) return x.m < y.m;
    return x.p < y.p;
  });
  return sectors;
}

}  // namespace corrgap
