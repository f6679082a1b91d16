#include <benchmark/benchmark.h>

#include <random>

#include "corrgap/eig.hpp"
#include "corrgap/measures.hpp"

namespace {

corrgap::Matrix random_hermitian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  corrgap::Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = gauss(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const corrgap::cplx v(gauss(rng), gauss(rng));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  return a;
}

// Ground state of the (s=1/2, m=1/2, p=2) block, expanded to the Fock basis.
corrgap::Wavefunction three_site_ground(const corrgap::ModelParams& params,
                                        const corrgap::FockBasis& basis,
                                        const corrgap::Matrix& h) {
  const corrgap::Matrix t_op = corrgap::build_translation(basis);
  const corrgap::SpinOperators spin = corrgap::build_spin_operators(basis);
  const auto sectors = corrgap::decompose_sectors(h, t_op, spin.sz, spin.s2, params.sites);
  for (const auto& sec : sectors) {
    if (!corrgap::same_labels(sec.basis.labels, corrgap::SymmetryLabels{0.5, 0.5, 2})) continue;
    const corrgap::EigenSystem es = corrgap::eigh(sec.block);
    corrgap::CVec full(basis.size(), corrgap::cplx(0.0, 0.0));
    for (std::size_t j = 0; j < sec.basis.vectors.size(); ++j) {
      for (std::size_t i = 0; i < full.size(); ++i) {
        full[i] += es.vectors(j, 0) * sec.basis.vectors[j][i];
      }
    }
    return corrgap::Wavefunction{corrgap::fock_tag(basis), std::move(full)};
  }
  throw std::runtime_error("sector not found");
}

void bm_basis_enumeration(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  for (auto _ : state) {
    corrgap::FockBasis basis(sites, sites / 2, sites / 2);
    benchmark::DoNotOptimize(basis.size());
  }
}
BENCHMARK(bm_basis_enumeration)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void bm_hamiltonian_build(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  const corrgap::ModelParams params{sites, 1.0, 2.0, (sites + 1) / 2, sites / 2};
  const corrgap::FockBasis basis(params.sites, params.n_up, params.n_down);
  for (auto _ : state) {
    const corrgap::Matrix h = corrgap::build_hamiltonian(params, basis);
    benchmark::DoNotOptimize(h.max_abs());
  }
}
BENCHMARK(bm_hamiltonian_build)->Arg(3)->Arg(4)->Arg(5);

void bm_eigh(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const corrgap::Matrix a = random_hermitian(n, 17);
  for (auto _ : state) {
    const corrgap::EigenSystem es = corrgap::eigh(a);
    benchmark::DoNotOptimize(es.values.front());
  }
}
BENCHMARK(bm_eigh)->Arg(16)->Arg(36)->Arg(64);

void bm_sector_decomposition(benchmark::State& state) {
  const corrgap::ModelParams params{3, 1.0, 1.0, 2, 1};
  const corrgap::FockBasis basis(3, 2, 1);
  const corrgap::Matrix h = corrgap::build_hamiltonian(params, basis);
  const corrgap::Matrix t_op = corrgap::build_translation(basis);
  const corrgap::SpinOperators spin = corrgap::build_spin_operators(basis);
  for (auto _ : state) {
    const auto sectors = corrgap::decompose_sectors(h, t_op, spin.sz, spin.s2, 3);
    benchmark::DoNotOptimize(sectors.size());
  }
}
BENCHMARK(bm_sector_decomposition);

void bm_correlation_report(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  const corrgap::ModelParams params{sites, 1.0, 1.0, (sites + 1) / 2, sites / 2};
  for (auto _ : state) {
    const corrgap::CorrelationReport rep = corrgap::correlation_report(params);
    benchmark::DoNotOptimize(rep.d_overlap);
  }
}
BENCHMARK(bm_correlation_report)->Arg(2)->Arg(3);

void bm_max_overlap_search(benchmark::State& state) {
  const corrgap::ModelParams params{3, 1.0, 1.0, 2, 1};
  const corrgap::FockBasis basis(3, 2, 1);
  const corrgap::Matrix h = corrgap::build_hamiltonian(params, basis);
  const corrgap::Wavefunction gs = three_site_ground(params, basis, h);
  corrgap::OverlapSearchOptions opts;
  opts.restarts = 4;
  opts.iters = 100;
  for (auto _ : state) {
    const corrgap::MaxOverlapResult mo = corrgap::max_overlap_determinant(gs, basis, params, opts);
    benchmark::DoNotOptimize(mo.overlap);
  }
}
BENCHMARK(bm_max_overlap_search);

}  // namespace

BENCHMARK_MAIN();
