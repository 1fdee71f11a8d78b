#include <benchmark/benchmark.h>

#include "hyplog/spectral.hpp"

namespace {

using namespace hyplog;

DomainSpec disk_domain(double rho) {
  DomainSpec spec;
  spec.disks.push_back({HyperbolicDisk(PointD(0.0, 0.0), rho), false});
  return spec;
}

void BM_Reflect(benchmark::State& state) {
  const Geodesic g = Geodesic::arc(0.7, 0.4);
  PointD z(0.21, -0.35);
  for (auto _ : state) {
    z = g.reflect(z);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_Reflect);

void BM_Kernel(benchmark::State& state) {
  const PointD z(0.2, 0.1), w(-0.3, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(z, w));
}
BENCHMARK(BM_Kernel);

void BM_BuildGrid(benchmark::State& state) {
  const DomainSpec spec = disk_domain(0.5);
  const double pitch = 1.0 / state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(build_grid(spec, pitch));
}
BENCHMARK(BM_BuildGrid)->Arg(25)->Arg(50)->Arg(100);

void BM_Assemble(benchmark::State& state) {
  const DomainSpec spec = disk_domain(0.5);
  const GriddedDomain dom = build_grid(spec, 1.0 / state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble(dom));
}
BENCHMARK(BM_Assemble)->Arg(25)->Arg(50)->Arg(100);

void BM_TopEigenvalue(benchmark::State& state) {
  const DomainSpec spec = disk_domain(0.5);
  const DiscreteOperator op = assemble(build_grid(spec, 1.0 / state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(top_eigenvalue(op));
}
BENCHMARK(BM_TopEigenvalue)->Arg(25)->Arg(50);

void BM_EigenDecompose(benchmark::State& state) {
  const DomainSpec spec = disk_domain(0.5);
  const DiscreteOperator op = assemble(build_grid(spec, 1.0 / state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigen_decompose(op));
}
BENCHMARK(BM_EigenDecompose)->Arg(25)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
