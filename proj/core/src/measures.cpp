#include "corrgap/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "corrgap/eig.hpp"

namespace corrgap {

namespace {

double energy_tol(double reference) { return 1e-10 * std::max(1.0, std::abs(reference)); }

}  // namespace

double overlap_distance(const Wavefunction& a, const Wavefunction& b) {
  if (a.basis_tag != b.basis_tag) {
    throw std::invalid_argument("overlap_distance: wavefunctions live in different bases");
  }
  if (a.amps.size() != b.amps.size()) {
    throw std::invalid_argument("overlap_distance: amplitude lengths differ");
  }
  const double ov = std::abs(inner(a.amps, b.amps));
  return std::max(0.0, 1.0 - ov * ov);
}

OneRdm one_rdm(const Wavefunction& psi, const FockBasis& basis) {
  if (psi.basis_tag != fock_tag(basis)) {
    throw std::invalid_argument("one_rdm: wavefunction basis does not match");
  }
  if (psi.amps.size() != basis.size()) {
    throw std::invalid_argument("one_rdm: amplitude length does not match the basis");
  }
  const int r = basis.sites();
  const int d = basis.n_orbitals();
  Matrix rho(d, d);

  for (std::size_t k = 0; k < basis.size(); ++k) {
    const cplx ck = psi.amps[k];
    if (ck == cplx(0.0, 0.0)) continue;
    const FockState& s = basis.at(k);
    for (int b = 0; b < d; ++b) {
      const auto killed = apply_ladder(s, orbital_from_index(b, r), LadderKind::annihilate, r);
      if (!killed) continue;
      for (int a = 0; a < d; ++a) {
        const auto created =
            apply_ladder(killed->state, orbital_from_index(a, r), LadderKind::create, r);
        if (!created) continue;
        // Cross-species moves leave the particle-number block; their
        // contribution to this expectation value is zero.
        const auto row = basis.find(created->state);
        if (!row) continue;
        rho(a, b) += std::conj(psi.amps[*row]) * double(killed->sign * created->sign) * ck;
      }
    }
  }

  if (rho.hermiticity_defect() > 1e-12 * std::max(1.0, rho.max_abs())) {
    throw std::runtime_error("one_rdm: density matrix is not Hermitian");
  }
  cplx tr(0.0, 0.0);
  for (int i = 0; i < d; ++i) tr += rho(i, i);
  if (std::abs(tr - cplx(double(basis.n_particles()), 0.0)) > 1e-10 * std::max(1, basis.n_particles())) {
    throw std::runtime_error("one_rdm: trace does not equal the particle number");
  }
  return OneRdm{rho.hermitian_part()};
}

NaturalSpectrum natural_occupations(const OneRdm& rdm) {
  const EigenSystem es = eigh(rdm.rho);
  NaturalSpectrum out;
  out.occupations.assign(es.values.rbegin(), es.values.rend());
  for (const double n : out.occupations) {
    if (n < -1e-9 || n > 1.0 + 1e-9) {
      throw std::runtime_error("natural occupation outside [0, 1]");
    }
  }
  return out;
}

double von_neumann_entropy(const NaturalSpectrum& spectrum) {
  double s = 0.0;
  for (const double n : spectrum.occupations) {
    const double clamped = std::clamp(n, 0.0, 1.0);
    if (clamped > 0.0) s -= clamped * std::log(clamped);
  }
  return s;
}

OccupationDistance occupation_distance(const NaturalSpectrum& spectrum, int n_particles) {
  const int d = int(spectrum.occupations.size());
  if (n_particles < 0 || n_particles > d) {
    throw std::invalid_argument("occupation_distance: particle number out of range");
  }
  double delta = 0.0;
  for (int i = 0; i < d; ++i) {
    const double target = (i < n_particles) ? 1.0 : 0.0;
    delta += std::abs(spectrum.occupations[i] - target);
  }
  OccupationDistance out;
  out.delta = delta;
  out.over_2n = (n_particles > 0) ? delta / (2.0 * n_particles) : 0.0;
  const int m = std::min(n_particles, d - n_particles);
  out.over_2m = (m > 0) ? delta / (2.0 * m) : 0.0;
  return out;
}

GapBoundCheck check_gap_bound(const Wavefunction& psi, const Wavefunction& gs, double e_gs,
                              double e_es, const Matrix& h_block) {
  if (psi.basis_tag != gs.basis_tag) {
    throw std::invalid_argument("check_gap_bound: states live in different bases");
  }
  if (psi.amps.size() != h_block.rows() || gs.amps.size() != h_block.rows()) {
    throw std::invalid_argument("check_gap_bound: state length does not match the block");
  }
  const double gap = e_es - e_gs;
  if (gap <= energy_tol(std::max(std::abs(e_es), std::abs(e_gs)))) {
    throw DegeneracyError("gap bound needs a nondegenerate ground state");
  }
  const double e_psi = std::real(inner(psi.amps, h_block * psi.amps));
  GapBoundCheck out;
  const double ov = std::abs(inner(gs.amps, psi.amps));
  out.lhs = ov * ov;
  out.rhs = (e_es - e_psi) / gap;
  out.holds = out.lhs >= out.rhs - 1e-10;
  return out;
}

OccupationBoundCheck check_occupation_bound(const NaturalSpectrum& spectrum,
                                            double det_overlap, int n_particles,
                                            int n_orbitals) {
  if (int(spectrum.occupations.size()) != n_orbitals) {
    throw std::invalid_argument("check_occupation_bound: spectrum length != orbital count");
  }
  if (det_overlap < -1e-12 || det_overlap > 1.0 + 1e-12) {
    throw std::invalid_argument("check_occupation_bound: overlap outside [0, 1]");
  }
  const int m = std::min(n_particles, n_orbitals - n_particles);
  if (m <= 0) throw std::invalid_argument("check_occupation_bound: M = min(N, d-N) must be positive");
  const OccupationDistance dist = occupation_distance(spectrum, n_particles);
  OccupationBoundCheck out;
  out.lhs = dist.delta / (2.0 * m);
  out.rhs = 1.0 - det_overlap * det_overlap;
  out.holds = out.lhs <= out.rhs + 1e-10;
  return out;
}

CorrelationReport correlation_report(const ModelParams& params, const ReportOptions& opts) {
  params.validate();
  if (params.t <= 0.0) {
    throw std::invalid_argument("correlation_report needs t > 0 (measures live on the U/t axis)");
  }

  const FockBasis basis(params.sites, params.n_up, params.n_down);
  const Matrix h = build_hamiltonian(params, basis);
  const Matrix t_op = build_translation(basis);
  const SpinOperators spin = build_spin_operators(basis);
  const auto sectors = decompose_sectors(h, t_op, spin.sz, spin.s2, params.sites);

  // Sector choice: explicit labels, or the sector holding the block's global
  // ground state.
  const Sector* chosen = nullptr;
  if (opts.sector) {
    for (const auto& sec : sectors) {
      if (same_labels(sec.basis.labels, *opts.sector)) {
        chosen = &sec;
        break;
      }
    }
    if (!chosen) {
      std::ostringstream os;
      os << "no sector with labels (s=" << opts.sector->s << ", m=" << opts.sector->m
         << ", p=" << opts.sector->p << ")";
      throw std::invalid_argument(os.str());
    }
  } else {
    double global_min = std::numeric_limits<double>::infinity();
    std::vector<std::pair<const Sector*, double>> minima;
    for (const auto& sec : sectors) {
      const double lo = eigh(sec.block).values.front();
      minima.emplace_back(&sec, lo);
      global_min = std::min(global_min, lo);
    }
    const double tol = energy_tol(global_min);
    for (const auto& [sec, lo] : minima) {
      if (lo > global_min + tol) continue;
      if (!chosen || sec->basis.labels.m > chosen->basis.labels.m + 0.25 ||
          (std::abs(sec->basis.labels.m - chosen->basis.labels.m) < 0.25 &&
           sec->basis.labels.p > chosen->basis.labels.p)) {
        chosen = sec;
      }
    }
  }

  if (chosen->basis.vectors.size() < 2) {
    throw DegeneracyError("selected sector has dimension 1: no excited state to gap against");
  }

  const EigenSystem block_eig = eigh(chosen->block);
  const double e_gs = block_eig.values[0];
  const double e_es = block_eig.values[1];
  if (e_es - e_gs <= energy_tol(std::max(std::abs(e_gs), std::abs(e_es)))) {
    std::ostringstream os;
    os << "degenerate sector ground state at u=" << params.u << ", t=" << params.t;
    throw DegeneracyError(os.str());
  }

  const RhfResult hf = rhf_state(params, chosen->basis.labels, basis, h);
  const Wavefunction hf_full = determinant_to_wavefunction(hf.det, basis);

  // Project the mean-field state onto the sector; it must lie inside.
  CVec hf_sector(chosen->basis.vectors.size());
  for (std::size_t j = 0; j < chosen->basis.vectors.size(); ++j) {
    hf_sector[j] = inner(chosen->basis.vectors[j], hf_full.amps);
  }
  if (std::abs(norm(hf_sector) - 1.0) > 1e-10) {
    throw std::logic_error("mean-field determinant does not lie in the selected sector");
  }
  normalize(hf_sector);

  const std::string stag = sector_tag(basis, chosen->basis.labels);
  const Wavefunction gs_sector{stag, block_eig.vectors.column(0)};
  const Wavefunction hf_in_sector{stag, hf_sector};

  // Ground state back in the Fock basis for the occupation measures.
  CVec gs_full(basis.size(), cplx(0.0, 0.0));
  for (std::size_t j = 0; j < chosen->basis.vectors.size(); ++j) {
    const cplx cj = gs_sector.amps[j];
    for (std::size_t i = 0; i < basis.size(); ++i) {
      gs_full[i] += cj * chosen->basis.vectors[j][i];
    }
  }
  const Wavefunction gs{fock_tag(basis), std::move(gs_full)};

  const NaturalSpectrum nat = natural_occupations(one_rdm(gs, basis));
  const OccupationDistance dist = occupation_distance(nat, basis.n_particles());

  CorrelationReport rep;
  rep.params = params;
  rep.sector = chosen->basis.labels;
  rep.e_gs = e_gs;
  rep.e_es = e_es;
  rep.e_hf = hf.energy;
  rep.e_corr = e_gs - hf.energy;
  rep.e_gap = e_es - e_gs;
  if (rep.e_corr > energy_tol(e_gs)) {
    throw std::logic_error("mean-field energy fell below the ground state (variational violation)");
  }
  rep.d_overlap = overlap_distance(gs_sector, hf_in_sector);
  rep.bound_ratio = std::abs(rep.e_corr) / rep.e_gap;
  rep.entropy = von_neumann_entropy(nat);
  rep.delta_l1 = dist.delta;
  rep.delta_over_2n = dist.over_2n;
  rep.delta_over_2m = dist.over_2m;
  rep.bound_meaningful = std::abs(rep.e_corr) < rep.e_gap;
  return rep;
}

}  // namespace corrgap
