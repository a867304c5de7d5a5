#include <benchmark/benchmark.h>

#include <vector>

#include "iondecay/bessel.hpp"
#include "iondecay/carrier.hpp"
#include "iondecay/hierarchy.hpp"
#include "iondecay/lindblad.hpp"
#include "iondecay/pulses.hpp"

namespace {

using namespace iondecay;

const double g = 0.202 * two_pi * 475e3;

std::vector<double> grid(double t_max, int n) {
  std::vector<double> out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = i * t_max / n;
  return out;
}

void BM_BesselK1_Series(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_k1(0.7));
  }
}
BENCHMARK(BM_BesselK1_Series);

void BM_BesselK1_ContinuedFraction(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_k1(37.0));
  }
}
BENCHMARK(BM_BesselK1_ContinuedFraction);

void BM_BlueSidebandPulse(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  const FockSpinVector psi = FockSpinVector::coherent(n_max, 2.0, Spin::down);
  const PulseParams pulse(0.7, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_ajc(psi, pulse));
  }
}
BENCHMARK(BM_BlueSidebandPulse)->Arg(64)->Arg(512);

void BM_DisplacementElement(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(displacement_matrix_element(0.202, 40, 37));
  }
}
BENCHMARK(BM_DisplacementElement);

void BM_HierarchyRun(benchmark::State& state) {
  const HierarchyParams p{g, 6e-3 * g, 1.0, static_cast<int>(state.range(0)), 0};
  const auto t = grid(120e-6, 1200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_hierarchy(p, t));
  }
}
BENCHMARK(BM_HierarchyRun)->Arg(4)->Arg(8);

void BM_OracleRun(benchmark::State& state) {
  OracleParams p{g, 0.0, 6e-3 * g, 1.0, static_cast<int>(state.range(0)),
                 OracleMode::ajc_drive};
  const LindbladGenerator gen(p);
  const auto rho0 =
      DensityMatrix::pure(FockSpinVector::basis_state(gen.n_max(), 0, Spin::down));
  const auto t = grid(20e-6, 200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(gen, rho0, t));
  }
}
BENCHMARK(BM_OracleRun)->Arg(14)->Arg(24);

void BM_PhaseSpaceGrid(benchmark::State& state) {
  const CarrierParams p{1.0, 10.0, 1.0};
  const GridSpec spec = GridSpec::centered(7.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pgrid(p, complexd(2.0, 0.0), 0.2, spec));
  }
}
BENCHMARK(BM_PhaseSpaceGrid)->Arg(201);

}  // namespace

BENCHMARK_MAIN();
