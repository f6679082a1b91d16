#include "corrgap/meanfield.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "corrgap/eig.hpp"

namespace corrgap {

namespace {

constexpr double kDegenTol = 1e-9;

CVec bloch_column(int q, Spin spin, int r) {
  CVec col(2 * r, cplx(0.0, 0.0));
  const int offset = (spin == Spin::up) ? 0 : r;
  const double norm = 1.0 / std::sqrt(double(r));
  for (int k = 0; k < r; ++k) {
    const double phase = -2.0 * std::numbers::pi * q * k / r;
    col[offset + k] = std::polar(norm, phase);
  }
  return col;
}

struct Filling {
  std::vector<int> paired;  // momenta occupied by both species
  std::optional<int> single;  // extra up momentum for odd particle number

  int momentum(int r) const {
    int total = 0;
    for (const int q : paired) total += 2 * q;
    if (single) total += *single;
    return ((total % r) + r) % r;
  }
  bool operator<(const Filling& other) const {
    return std::tie(paired, single) < std::tie(other.paired, other.single);
  }
};

// All minimal-energy plane-wave fillings, by exhaustion over level subsets.
std::vector<Filling> minimal_fillings(int r, int n_pairs, bool open_shell, double t) {
  std::vector<double> eps(r);
  for (int q = 0; q < r; ++q) eps[q] = -t * std::cos(2.0 * std::numbers::pi * q / r);

  std::vector<Filling> best;
  double best_energy = std::numeric_limits<double>::infinity();
  const double tol = kDegenTol * std::max(1.0, t);

  const std::uint32_t limit = std::uint32_t(1) << r;
  if (r > 20) throw std::invalid_argument("mean-field filling enumeration limited to 20 sites");
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != n_pairs) continue;
    double e = 0.0;
    std::vector<int> paired;
    for (int q = 0; q < r; ++q) {
      if (mask & (std::uint32_t(1) << q)) {
        e += 2.0 * eps[q];
        paired.push_back(q);
      }
    }
    if (!open_shell) {
      if (e < best_energy - tol) {
        best.clear();
        best_energy = e;
      }
      if (e <= best_energy + tol) best.push_back({paired, std::nullopt});
      continue;
    }
    for (int qs = 0; qs < r; ++qs) {
      if (mask & (std::uint32_t(1) << qs)) continue;
      const double es = e + eps[qs];
      if (es < best_energy - tol) {
        best.clear();
        best_energy = es;
      }
      if (es <= best_energy + tol) best.push_back({paired, qs});
    }
  }
  return best;
}

SlaterDeterminant assemble_determinant(const Filling& f, int r) {
  std::vector<CVec> cols;
  for (const int q : f.paired) cols.push_back(bloch_column(q, Spin::up, r));
  if (f.single) cols.push_back(bloch_column(*f.single, Spin::up, r));
  for (const int q : f.paired) cols.push_back(bloch_column(q, Spin::down, r));
  return SlaterDeterminant{Matrix::from_columns(cols)};
}

std::vector<Filling> admissible_fillings(const ModelParams& params,
                                         const std::optional<SymmetryLabels>& hint) {
  const int r = params.sites;
  if (params.t <= 0.0) {
    throw std::invalid_argument("mean-field reference needs a positive hopping t");
  }
  if (params.n_up != params.n_down && params.n_up != params.n_down + 1) {
    throw std::invalid_argument("restricted mean field needs n_up == n_down or n_up == n_down + 1");
  }
  const bool open_shell = (params.n_up == params.n_down + 1);
  const double m = 0.5 * (params.n_up - params.n_down);
  if (hint) {
    if (std::abs(hint->m - m) > 0.25) {
      throw std::invalid_argument("sector hint m is inconsistent with the particle counts");
    }
    // A paired filling is an exact S^2 eigenstate with s = m.
    if (std::abs(hint->s - m) > 0.25) {
      throw std::invalid_argument("mean-field determinant cannot carry the requested total spin");
    }
    if (hint->p < 0 || hint->p >= r) throw std::invalid_argument("sector hint p out of range");
  }

  auto fillings = minimal_fillings(r, params.n_down, open_shell, params.t);
  if (hint) {
    std::erase_if(fillings, [&](const Filling& f) { return f.momentum(r) != hint->p; });
  }
  if (fillings.empty()) {
    throw std::invalid_argument("no minimal-energy filling matches the sector hint");
  }
  std::sort(fillings.begin(), fillings.end());
  fillings.erase(std::unique(fillings.begin(), fillings.end(),
                             [](const Filling& a, const Filling& b) { return !(a < b) && !(b < a); }),
                 fillings.end());
  if (fillings.size() > 1) {
    throw std::invalid_argument(
        "mean-field filling is ambiguous (degenerate levels); pass a sector hint");
  }
  return fillings;
}

double expectation(const Matrix& h, const CVec& v) {
  return std::real(inner(v, h * v));
}

Matrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = gauss(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v(0.5 * gauss(rng), 0.5 * gauss(rng));
      g(i, j) = v;
      g(j, i) = std::conj(v);
    }
  }
  return g;
}

// exp(i step G) for Hermitian G.
Matrix unitary_exp(const Matrix& g, double step) {
  const EigenSystem es = eigh(g);
  const std::size_t n = g.rows();
  Matrix out(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const cplx phase = std::polar(1.0, step * es.values[a]);
    for (std::size_t i = 0; i < n; ++i) {
      const cplx via = es.vectors(i, a);
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += via * phase * std::conj(es.vectors(j, a));
      }
    }
  }
  return out;
}

struct SpinFrame {
  Matrix up;    // r x n_up
  Matrix down;  // r x n_down
};

SlaterDeterminant frame_to_determinant(const SpinFrame& f, int r) {
  std::vector<CVec> cols;
  for (std::size_t j = 0; j < f.up.cols(); ++j) {
    CVec col(2 * r, cplx(0.0, 0.0));
    for (int i = 0; i < r; ++i) col[i] = f.up(i, j);
    cols.push_back(std::move(col));
  }
  for (std::size_t j = 0; j < f.down.cols(); ++j) {
    CVec col(2 * r, cplx(0.0, 0.0));
    for (int i = 0; i < r; ++i) col[r + i] = f.down(i, j);
    cols.push_back(std::move(col));
  }
  return SlaterDeterminant{Matrix::from_columns(cols)};
}

SpinFrame determinant_to_frame(const SlaterDeterminant& det, int r, int n_up, int n_down) {
  SpinFrame f{Matrix(r, n_up), Matrix(r, n_down)};
  for (int j = 0; j < n_up; ++j) {
    for (int i = 0; i < r; ++i) f.up(i, j) = det.orbitals(i, j);
  }
  for (int j = 0; j < n_down; ++j) {
    for (int i = 0; i < r; ++i) f.down(i, j) = det.orbitals(r + i, n_up + j);
  }
  return f;
}

Matrix random_frame_block(int r, int n, std::mt19937_64& rng) {
  const Matrix g = random_hermitian(r, rng);
  const EigenSystem es = eigh(g);
  Matrix out(r, n);
  for (int j = 0; j < n; ++j) out.set_column(j, es.vectors.column(j));
  return out;
}

}  // namespace

RhfResult rhf_state(const ModelParams& params, std::optional<SymmetryLabels> sector_hint,
                    const FockBasis& basis, const Matrix& h) {
  params.validate();
  if (basis.sites() != params.sites || basis.n_up() != params.n_up ||
      basis.n_down() != params.n_down) {
    throw std::invalid_argument("basis does not match model parameters");
  }
  const auto fillings = admissible_fillings(params, sector_hint);
  RhfResult result{assemble_determinant(fillings.front(), params.sites), 0.0};
  const Wavefunction w = determinant_to_wavefunction(result.det, basis);
  result.energy = expectation(h, w.amps);
  return result;
}

RhfResult rhf_state(const ModelParams& params, std::optional<SymmetryLabels> sector_hint) {
  const FockBasis basis(params.sites, params.n_up, params.n_down);
  const Matrix h = build_hamiltonian(params, basis);
  return rhf_state(params, sector_hint, basis, h);
}

Wavefunction determinant_to_wavefunction(const SlaterDeterminant& det, const FockBasis& basis) {
  const int n_orb = basis.n_orbitals();
  const int n = basis.n_particles();
  if (det.orbitals.rows() != std::size_t(n_orb)) {
    throw std::invalid_argument("orbital matrix has wrong row count");
  }
  if (det.orbitals.cols() != std::size_t(n)) {
    throw std::invalid_argument("orbital count must equal the particle number");
  }
  for (std::size_t a = 0; a < det.orbitals.cols(); ++a) {
    for (std::size_t b = a; b < det.orbitals.cols(); ++b) {
      const cplx g = inner(det.orbitals.column(a), det.orbitals.column(b));
      const cplx expect = (a == b) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      if (std::abs(g - expect) > 1e-10) {
        throw std::invalid_argument("determinant orbitals are not orthonormal");
      }
    }
  }

  CVec amps(basis.size());
  std::vector<int> occ;
  occ.reserve(n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const FockState& s = basis.at(k);
    occ.clear();
    for (int i = 0; i < basis.sites(); ++i) {
      if (s.up & (std::uint32_t(1) << i)) occ.push_back(i);
    }
    for (int i = 0; i < basis.sites(); ++i) {
      if (s.down & (std::uint32_t(1) << i)) occ.push_back(basis.sites() + i);
    }
    Matrix minor(n, n);
    for (int row = 0; row < n; ++row) {
      for (int col = 0; col < n; ++col) minor(row, col) = det.orbitals(occ[row], col);
    }
    amps[k] = corrgap::det(minor);
  }

  const double nrm = norm(amps);
  if (std::abs(nrm - 1.0) > 1e-8) {
    throw std::runtime_error("determinant has weight outside the particle-number block");
  }
  for (auto& a : amps) a /= nrm;
  return Wavefunction{fock_tag(basis), std::move(amps)};
}

MaxOverlapResult max_overlap_determinant(const Wavefunction& psi, const FockBasis& basis,
                                         const ModelParams& params,
                                         const OverlapSearchOptions& opts) {
  params.validate();
  if (psi.basis_tag != fock_tag(basis)) {
    throw std::invalid_argument("wavefunction basis does not match the given Fock basis");
  }
  if (psi.amps.size() != basis.size()) {
    throw std::invalid_argument("wavefunction length does not match the basis");
  }
  if (opts.restarts < 1 || opts.iters < 1 || opts.initial_step <= 0.0) {
    throw std::invalid_argument("overlap search needs restarts >= 1, iters >= 1, step > 0");
  }
  const int r = params.sites;
  const int n_up = params.n_up;
  const int n_down = params.n_down;

  const auto overlap_of = [&](const SpinFrame& f) {
    const Wavefunction w = determinant_to_wavefunction(frame_to_determinant(f, r), basis);
    return std::abs(inner(w.amps, psi.amps));
  };

  // Mean-field fillings (every translation label that admits one) seed the
  // first restarts; the rest start from random orthonormal frames.
  std::vector<SpinFrame> seeds;
  std::set<std::vector<int>> seen;
  const double m = 0.5 * (n_up - n_down);
  for (int p = 0; p < r; ++p) {
    try {
      const auto fillings = admissible_fillings(params, SymmetryLabels{m, m, p});
      std::vector<int> key = fillings.front().paired;
      if (fillings.front().single) key.push_back(100 + *fillings.front().single);
      if (seen.insert(key).second) {
        seeds.push_back(determinant_to_frame(assemble_determinant(fillings.front(), r), r, n_up, n_down));
      }
    } catch (const std::invalid_argument&) {
      continue;
    }
  }

  MaxOverlapResult best{SlaterDeterminant{}, -1.0};
  for (int restart = 0; restart < opts.restarts; ++restart) {
    std::mt19937_64 rng(opts.seed + std::uint64_t(restart) * 0x9e3779b97f4a7c15ULL);
    SpinFrame frame;
    if (std::size_t(restart) < seeds.size()) {
      frame = seeds[restart];
    } else {
      frame = SpinFrame{random_frame_block(r, n_up, rng), random_frame_block(r, n_down, rng)};
    }

    double local = overlap_of(frame);
    double step = opts.initial_step;
    for (int it = 0; it < opts.iters && step > 1e-13; ++it) {
      const Matrix g_up = random_hermitian(r, rng);
      const Matrix g_down = random_hermitian(r, rng);
      SpinFrame cand{unitary_exp(g_up, step) * frame.up, unitary_exp(g_down, step) * frame.down};
      const double c = overlap_of(cand);
      if (c > local) {
        local = c;
        frame = std::move(cand);
      } else {
        step *= 0.5;
      }
    }
    if (local > best.overlap) {
      best.overlap = local;
      best.det = frame_to_determinant(frame, r);
    }
  }
  return best;
}

}  // namespace corrgap
