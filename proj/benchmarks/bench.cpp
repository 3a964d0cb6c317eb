// Microbenchmarks for the hot paths: translation, assembly+solve, the
// spectral oracle, and a frequency sweep.

#include <benchmark/benchmark.h>

#include <vector>

#include "ridealog/analogy.hpp"
#include "ridealog/model.hpp"
#include "ridealog/oracle.hpp"
#include "ridealog/solver.hpp"

namespace {

ridealog::ThreeAxleParams truck_params() {
  ridealog::ThreeAxleParams p;
  p.m = 22000;
  p.I_G = 21000;
  p.m_ssd = 900;
  p.m_ssm = 1400;
  p.m_sst = 1400;
  p.k_sd = 610000;
  p.k_sm = 2.6e6;
  p.k_st = 2.6e6;
  p.d_sd = 15400;
  p.d_sm = 15400;
  p.d_st = 15400;
  p.k_rd = 1.36e6;
  p.k_rm = 5.43e6;
  p.k_rt = 5.43e6;
  p.d_rd = 150;
  p.d_rm = 150;
  p.d_rt = 150;
  p.l_d = 4.44;
  p.l_t = 1.71;
  p.l_a = 4.80;
  p.l_b = 1.35;
  return p;
}

ridealog::HarmonicRoadExcitation road() {
  ridealog::HarmonicRoadExcitation e;
  e.Y = 0.05;
  e.lambda = 2.0;
  e.v = 60.0 / 3.6;
  return e;
}

void BM_translate(benchmark::State& state) {
  const ridealog::SecondOrderModel model = ridealog::build_three_axle(truck_params());
  const ridealog::HarmonicRoadExcitation drive = road();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ridealog::translate_force_current(model, drive));
  }
}
BENCHMARK(BM_translate);

void BM_assemble_and_solve(benchmark::State& state) {
  const ridealog::SecondOrderModel model = ridealog::build_three_axle(truck_params());
  const ridealog::HarmonicRoadExcitation drive = road();
  const double omega = drive.omega();
  const ridealog::Netlist net =
      ridealog::apply_norton(ridealog::translate_force_current(model, drive), omega);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ridealog::solve(ridealog::assemble_admittance(net, omega)));
  }
}
BENCHMARK(BM_assemble_and_solve);

void BM_spectral_oracle(benchmark::State& state) {
  const ridealog::SecondOrderModel model = ridealog::build_three_axle(truck_params());
  const ridealog::ExcitationSpec drive = ridealog::ExcitationSpec::roadway(road());
  ridealog::SpectralGrid grid;
  grid.samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ridealog::spectral_velocities(model, drive, grid));
  }
}
BENCHMARK(BM_spectral_oracle)->Arg(256)->Arg(1024);

void BM_sweep(benchmark::State& state) {
  const ridealog::SecondOrderModel model = ridealog::build_three_axle(truck_params());
  const ridealog::ExcitationSpec drive = ridealog::ExcitationSpec::roadway(road());
  std::vector<double> omegas;
  const int points = static_cast<int>(state.range(0));
  for (int i = 0; i < points; ++i) {
    omegas.push_back(5.0 + i * (115.0 / (points - 1)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(ridealog::sweep(model, drive, omegas));
  }
}
BENCHMARK(BM_sweep)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
