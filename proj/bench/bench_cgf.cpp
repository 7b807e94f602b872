// Serial vs parallel kernels on the 40-breakpoint function.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "cgf/additivity.hpp"
#include "cgf/catalog.hpp"
#include "cgf/verify.hpp"

using namespace cgf;

static void BM_DeltaP(benchmark::State& state) {
  const Exec exec = state.range(0) ? Exec::parallel : Exec::serial;
  const auto& P = kzh_function().complex();
  for (auto _ : state) {
    auto dc = delta_p(P, exec);
    benchmark::DoNotOptimize(dc);
  }
  state.SetLabel(exec == Exec::parallel ? "parallel" : "serial");
}
BENCHMARK(BM_DeltaP)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_DeltaPReference(benchmark::State& state) {
  const auto& P = psi_function().complex();
  for (auto _ : state) {
    auto dc = delta_p_reference(P);
    benchmark::DoNotOptimize(dc);
  }
}
BENCHMARK(BM_DeltaPReference)->Unit(benchmark::kMillisecond);

static void BM_SlackSweep(benchmark::State& state) {
  const Exec exec = state.range(0) ? Exec::parallel : Exec::serial;
  const auto& pi = kzh_function();
  const auto dc = delta_p(pi.complex());
  for (auto _ : state) {
    auto s = slack_sweep(pi, dc, exec);
    benchmark::DoNotOptimize(s);
  }
  state.SetLabel(exec == Exec::parallel ? "parallel" : "serial");
  state.counters["faces"] = static_cast<double>(dc.size());
}
BENCHMARK(BM_SlackSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Lifted(benchmark::State& state) {
  const Exec exec = state.range(0) ? Exec::parallel : Exec::serial;
  for (auto _ : state) {
    auto r = verify_lifted(kzh_function(), LiftedSampling{2}, exec);
    benchmark::DoNotOptimize(r);
  }
  state.SetLabel(exec == Exec::parallel ? "parallel" : "serial");
}
BENCHMARK(BM_Lifted)->Arg(0)->Arg(1)->Unit(benchmark::kSecond)->Iterations(1);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::AddCustomContext("omp_threads", std::to_string(omp_get_max_threads()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
}
