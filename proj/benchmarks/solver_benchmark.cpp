#include <benchmark/benchmark.h>

#include <cstddef>
#include <string>
#include <vector>

#include "sadf/adf.hpp"
#include "sadf/oracle.hpp"
#include "sadf/strong.hpp"

namespace {

// Alternating support/attack chain: a0 holds, every ai leans on its
// predecessor, with each odd link negated to keep the lattice non-trivial.
sadf::Adf make_chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<sadf::Formula> conditions;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  conditions.push_back(sadf::Formula::constant(true));
  for (std::size_t i = 1; i < n; ++i) {
    sadf::Formula parent = sadf::Formula::atom(names[i - 1]);
    conditions.push_back(i % 2 == 0 ? parent
                                    : sadf::Formula::negation(parent));
  }
  return sadf::Adf(names, conditions);
}

void BM_Grounded(benchmark::State& state) {
  sadf::Adf adf = make_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sadf::grounded(adf));
}
BENCHMARK(BM_Grounded)->Arg(8)->Arg(16)->Arg(32);

void BM_StrongAdmissibleCheck(benchmark::State& state) {
  sadf::Adf adf = make_chain(static_cast<std::size_t>(state.range(0)));
  sadf::Interpretation v = sadf::grounded(adf);
  for (auto _ : state)
    benchmark::DoNotOptimize(sadf::is_strongly_admissible(adf, v));
}
BENCHMARK(BM_StrongAdmissibleCheck)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateStronglyAdmissible(benchmark::State& state) {
  sadf::Adf adf = make_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sadf::enumerate_strongly_admissible(adf));
}
BENCHMARK(BM_EnumerateStronglyAdmissible)->Arg(4)->Arg(6)->Arg(8);

void BM_BuildLattice(benchmark::State& state) {
  sadf::Adf adf = make_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sadf::build_lattice(adf));
}
BENCHMARK(BM_BuildLattice)->Arg(4)->Arg(6)->Arg(8);

void BM_BruteForceOracle(benchmark::State& state) {
  sadf::Adf adf = make_chain(static_cast<std::size_t>(state.range(0)));
  sadf::Interpretation v = sadf::grounded(adf);
  for (auto _ : state)
    benchmark::DoNotOptimize(sadf::brute_force_sadm(adf, v));
}
BENCHMARK(BM_BruteForceOracle)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
