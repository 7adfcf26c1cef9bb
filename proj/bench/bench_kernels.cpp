#include <benchmark/benchmark.h>

#include "coverlab/catalog.hpp"
#include "coverlab/families.hpp"
#include "coverlab/fiber.hpp"
#include "coverlab/kernels.hpp"

using namespace coverlab;

namespace {

const MonomialIdeal& petersen_cover() {
  static const MonomialIdeal j = [] {
    for (auto& ng : catalog())
      if (ng.name == "Petersen") return cover_ideal(ng.graph);
    return cover_ideal(family::circulant(10, 2));
  }();
  return j;
}

std::vector<Monomial> cube_products() {
  return kernels::serial::distinct_multiset_products(petersen_cover().generators(), 3);
}

template <auto Fn>
void BM_minimal_elements(benchmark::State& state) {
  const auto input = cube_products();
  for (auto _ : state) benchmark::DoNotOptimize(Fn(input));
  state.SetItemsProcessed(state.iterations() * input.size());
}

template <auto Fn>
void BM_multiset_products(benchmark::State& state) {
  const auto& gens = petersen_cover().generators();
  const auto r = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(gens, r));
}

template <bool Parallel>
void BM_toric_profile(benchmark::State& state) {
  const auto j = cover_ideal(family::h_family(static_cast<std::size_t>(state.range(0))));
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    if constexpr (Parallel)
      benchmark::DoNotOptimize(toric_profile(j, k));
    else
      benchmark::DoNotOptimize(toric_profile_serial(j, k));
  }
}

}  // namespace

BENCHMARK(BM_minimal_elements<kernels::serial::minimal_elements>)->Name("minimal_elements/serial");
BENCHMARK(BM_minimal_elements<kernels::parallel::minimal_elements>)->Name("minimal_elements/parallel");
BENCHMARK(BM_multiset_products<kernels::serial::distinct_multiset_products>)
    ->Name("multiset_products/serial")
    ->DenseRange(2, 4);
BENCHMARK(BM_multiset_products<kernels::parallel::distinct_multiset_products>)
    ->Name("multiset_products/parallel")
    ->DenseRange(2, 4);
BENCHMARK(BM_toric_profile<false>)->Name("toric_profile/serial")->DenseRange(3, 5);
BENCHMARK(BM_toric_profile<true>)->Name("toric_profile/parallel")->DenseRange(3, 5);

BENCHMARK_MAIN();
