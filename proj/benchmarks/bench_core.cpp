#include <benchmark/benchmark.h>

#include "tensorideals/groebner.hpp"
#include "tensorideals/hypermatrix.hpp"
#include "tensorideals/projection.hpp"
#include "tensorideals/symtensor.hpp"
#include "tensorideals/varieties.hpp"

namespace {

void BM_PolynomialMul(benchmark::State& state) {
  auto reg = tid::VarRegistry::make({"x", "y", "z"});
  tid::Polynomial x = tid::Polynomial::variable(reg, 0);
  tid::Polynomial y = tid::Polynomial::variable(reg, 1);
  tid::Polynomial z = tid::Polynomial::variable(reg, 2);
  tid::Polynomial f = (x + y + z).pow(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * f);
  }
}
BENCHMARK(BM_PolynomialMul)->Arg(4)->Arg(8);

void BM_TwoMinors222(benchmark::State& state) {
  tid::Hypermatrix a = tid::Hypermatrix::generic({2, 2, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.d_minors(2));
  }
}
BENCHMARK(BM_TwoMinors222);

void BM_GradedKernelDim2(benchmark::State& state) {
  tid::SymProfile profile{{2, 2}, {1, 2}};
  tid::Parameterization map = tid::segre_veronese_map(profile);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tid::graded_kernel_dim(map, 2));
  }
}
BENCHMARK(BM_GradedKernelDim2);

void BM_SegreKernelGroebner(benchmark::State& state) {
  tid::SymProfile profile{{2, 2}, {1, 1}};
  tid::Parameterization map = tid::segre_veronese_map(profile);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tid::kernel_of_map(map.ambient, map.params, map.targets));
  }
}
BENCHMARK(BM_SegreKernelGroebner);

void BM_ProjectionBuild(benchmark::State& state) {
  tid::ProjectionProfile profile{2, 4, 2, 0};
  for (auto _ : state) {
    tid::Projection model(profile);
    benchmark::DoNotOptimize(model.relation_rank());
  }
}
BENCHMARK(BM_ProjectionBuild);

}  // namespace

BENCHMARK_MAIN();
