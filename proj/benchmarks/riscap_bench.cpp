#include <benchmark/benchmark.h>

#include "riscap/capacity.hpp"
#include "riscap/mgf.hpp"
#include "riscap/montecarlo.hpp"
#include "riscap/specfun.hpp"

using namespace riscap;

namespace {

SystemParams scenario(Model model, int n) {
  SystemParams p;
  p.model = model;
  p.n_cells = n;
  if (model == Model::Relay) p.r_s_m = 10.0;
  return p;
}

void BM_BesselK0(benchmark::State& state) {
  double x = 0.11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::bessel_k0(x));
    x = x < 500.0 ? x * 1.7 : 0.11;
  }
}
BENCHMARK(BM_BesselK0);

void BM_Gauss2f1NearOne(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::gauss_2f1(2.0, 0.5, 2.5, 1.0 - 1e-5));
}
BENCHMARK(BM_Gauss2f1NearOne);

void BM_MeijerG0220(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::meijer_g_0220(4.0));
}
BENCHMARK(BM_MeijerG0220);

void BM_MeijerG2332(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::meijer_g_2332(50.0));
}
BENCHMARK(BM_MeijerG2332);

void BM_MgfDoubleCell(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mgf::mgf_double_cell(0.7));
}
BENCHMARK(BM_MgfDoubleCell);

void BM_MgfTripleCell(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mgf::mgf_triple_cell(0.02));
}
BENCHMARK(BM_MgfTripleCell);

void BM_AvgCapacity(benchmark::State& state) {
  const SystemParams p =
      scenario(state.range(0) ? Model::Relay : Model::AccessPoint, 16);
  for (auto _ : state)
    benchmark::DoNotOptimize(capacity::avg_capacity(p, Link::Destination));
}
BENCHMARK(BM_AvgCapacity)->Arg(0)->Arg(1);

void BM_EstimateSecrecy(benchmark::State& state) {
  const SystemParams p = scenario(Model::AccessPoint, 16);
  mc::McConfig cfg;
  cfg.sample_count = 10'000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc::estimate_secrecy(p, cfg));
    cfg.base_seed += 1;
  }
}
BENCHMARK(BM_EstimateSecrecy);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
