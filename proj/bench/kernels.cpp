// Serial reference versus the tabulated OpenMP kernel for the
// GA(1,5)-identity residuals.

#include "omegalie/identity_kernel.hpp"
#include "omegalie/matrix_constructions.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <map>
#include <random>

namespace {

using namespace omegalie;

const StructureTensor& tensor_for(std::size_t dim) {
  static std::map<std::size_t, StructureTensor> cache;
  auto it = cache.find(dim);
  if (it == cache.end()) {
    StructureTensor c;
    if (dim == 8) {
      // the full order-2 cubic algebra, which satisfies the identity
      c = extract_structure_constants(cubic_product(CubicForm::Beta), cubic_unit_basis(2));
    } else {
      std::mt19937_64 rng(dim);
      c = random_omega_symmetric(dim, rng);
    }
    it = cache.emplace(dim, std::move(c)).first;
  }
  return it->second;
}

template <CheckReport (*Kernel)(const StructureTensor&, std::span<const SlotMap>, std::size_t)>
void run(benchmark::State& state) {
  const StructureTensor& c = tensor_for(static_cast<std::size_t>(state.range(0)));
  const auto maps = slot_maps(ga15_rows());
  for (auto _ : state) {
    CheckReport r = Kernel(c, maps, default_violation_limit);
    benchmark::DoNotOptimize(r);
  }
  state.counters["tuples"] = std::pow(static_cast<double>(c.dim()), 6);
}

void BM_identity_serial(benchmark::State& state) { run<identity_residuals_serial>(state); }
void BM_identity_parallel(benchmark::State& state) { run<identity_residuals_parallel>(state); }

BENCHMARK(BM_identity_serial)->Arg(3)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_identity_parallel)->Arg(3)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
