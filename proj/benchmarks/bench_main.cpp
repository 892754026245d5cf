#include <benchmark/benchmark.h>

#include "ocbounds/estimator.hpp"
#include "ocbounds/saddle_solver.hpp"

namespace {

void BM_Assembly(benchmark::State& state) {
  const ocb::Mesh mesh(static_cast<int>(state.range(0)));
  const ocb::ProblemSpec spec = ocb::sine_problem();
  for (auto _ : state) {
    auto system = ocb::build_saddle_system_unconstrained(mesh, spec);
    benchmark::DoNotOptimize(system.rhs_top.data());
  }
  state.SetComplexityN(static_cast<long>(mesh.num_vertices()));
}
BENCHMARK(BM_Assembly)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond)->Complexity();

void BM_PreconditionerSetup(benchmark::State& state) {
  const ocb::Mesh mesh(static_cast<int>(state.range(0)));
  const ocb::ProblemSpec spec = ocb::sine_problem();
  const auto system = ocb::build_saddle_system_unconstrained(mesh, spec);
  for (auto _ : state) {
    ocb::BlockPreconditioner p(system, spec.lambda, ocb::PreconditionerVariant::Unconstrained);
    benchmark::DoNotOptimize(&p);
  }
}
BENCHMARK(BM_PreconditionerSetup)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_Minres(benchmark::State& state) {
  const ocb::Mesh mesh(static_cast<int>(state.range(0)));
  const ocb::ProblemSpec spec = ocb::sine_problem();
  const auto system = ocb::build_saddle_system_unconstrained(mesh, spec);
  const ocb::BlockPreconditioner p(system, spec.lambda, ocb::PreconditionerVariant::Unconstrained);
  int iterations = 0;
  for (auto _ : state) {
    const auto r = ocb::minres_solve(system, p, {1e-8, 1000, 0});
    iterations = r.iterations;
    benchmark::DoNotOptimize(r.y.data());
  }
  state.counters["iterations"] = iterations;
}
BENCHMARK(BM_Minres)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond);

void BM_Estimator(benchmark::State& state) {
  const ocb::Mesh mesh(static_cast<int>(state.range(0)));
  const ocb::ProblemSpec spec = ocb::sine_problem();
  const auto system = ocb::build_saddle_system_unconstrained(mesh, spec);
  const ocb::BlockPreconditioner p(system, spec.lambda, ocb::PreconditionerVariant::Unconstrained);
  const auto r = ocb::minres_solve(system, p);
  const ocb::ScalarField y(mesh, r.y, true), adj(mesh, r.p, true);
  for (auto _ : state) {
    const auto report = ocb::evaluate_bounds(y, adj, spec);
    benchmark::DoNotOptimize(report.j_plus);
  }
}
BENCHMARK(BM_Estimator)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
