// Microbenchmarks for the hot paths: closed forms, quadrature references,
// and the analysis drivers built on top of them.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "polder/analysis.hpp"
#include "polder/closed_forms.hpp"
#include "polder/electrostatics.hpp"
#include "polder/kernels.hpp"
#include "polder/machine.hpp"
#include "polder/tensors.hpp"

namespace {

using namespace polder;

constexpr double kTheta = 0.6;
constexpr double kH = 0.8;

void bm_ring_closed(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ring_energy_e1_radial(1.0, 1.0, 1.0, kH, kTheta));
}
BENCHMARK(bm_ring_closed);

void bm_ring_full_tensor(benchmark::State& state) {
  const AtomPolarizability atom{0.9, 0.5, 0.2, kTheta, 0.7, 1.1};
  const AnnularPolarizability ring{0.7, 0.4, 0.25};
  for (auto _ : state) benchmark::DoNotOptimize(ring_energy(atom, ring, 1.0, kH));
}
BENCHMARK(bm_ring_full_tensor);

void bm_ring_quadrature(benchmark::State& state) {
  const DyadicKernel cp = cp_kernel();
  const AtomPolarizability atom{1.0, 0.0, 0.0, kTheta, 0.0, 0.0};
  const AnnularPolarizability pol = AnnularPolarizability::radial(1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(ring_energy_quadrature(atom, pol, 1.0, kH, cp));
}
BENCHMARK(bm_ring_quadrature);

void bm_disc_closed(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(disc_energy_e1(LayerMode::Radial, 1.0, 1.0, 1.0, 2.0, kH, kTheta));
}
BENCHMARK(bm_disc_closed);

void bm_disc_quadrature(benchmark::State& state) {
  const DyadicKernel cp = cp_kernel();
  const AtomPolarizability atom{1.0, 0.0, 0.0, kTheta, 0.0, 0.0};
  const AnnularPolarizability pol = AnnularPolarizability::radial(1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(disc_energy_quadrature(atom, pol, 1.0, 2.0, kH, cp));
}
BENCHMARK(bm_disc_quadrature);

void bm_plate_quadrature(benchmark::State& state) {
  const DyadicKernel cp = cp_kernel();
  const AtomPolarizability atom{1.0, 0.0, 0.0, kTheta, 0.0, 0.0};
  const AnnularPolarizability pol = AnnularPolarizability::axial(1.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(plate_energy_quadrature(atom, pol, 1.0, kH, cp));
}
BENCHMARK(bm_plate_quadrature);

void bm_torsion_roots(benchmark::State& state) {
  const EnergyFamily fam = [](double u, double th) {
    return ring_energy_e1_radial(1.0, 1.0, 1.0, u, th);
  };
  for (auto _ : state) benchmark::DoNotOptimize(torsion_free_heights(fam));
}
BENCHMARK(bm_torsion_roots);

void bm_repulsion_intervals(benchmark::State& state) {
  const ForceFamily force = [](double u, double th) {
    return ring_force_e1_radial(1.0, 1.0, 1.0, u, th);
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(repulsion_intervals(force, 0.5));
}
BENCHMARK(bm_repulsion_intervals);

void bm_cycle_report(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(cycle_report(EngagementHeight::TorsionFree));
}
BENCHMARK(bm_cycle_report);

void bm_dipole_quadrature(benchmark::State& state) {
  const Vec3 p{std::sin(kTheta), 0.0, std::cos(kTheta)};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        dipole_ring_energy_quadrature(p, RingDipolePolarization::Axial, 1.0, kH));
}
BENCHMARK(bm_dipole_quadrature);

}  // namespace

BENCHMARK_MAIN();
