#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "jumpnum/jumping_numbers.hpp"
#include "jumpnum/lattice.hpp"
#include "jumpnum/oracle.hpp"
#include "jumpnum/resolution_file.hpp"

using namespace jumpnum;

namespace {

IdealSpec example() {
  std::ifstream in(JUMPNUM_BENCH_DATA_DIR "/example6.res");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_resolution(ss.str());
}

void BM_ValuationTable(benchmark::State& state) {
  auto ideal = example();
  for (auto _ : state) benchmark::DoNotOptimize(valuation_table(ideal.graph));
}
BENCHMARK(BM_ValuationTable);

void BM_JumpingSet(benchmark::State& state) {
  auto ideal = example();
  Rational bound(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jumping_set(ideal, bound));
}
BENCHMARK(BM_JumpingSet)->Arg(1)->Arg(2)->Arg(4);

void BM_OracleJumpingSet(benchmark::State& state) {
  auto ideal = example();
  Rational bound(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_jumping_set(ideal, bound));
}
BENCHMARK(BM_OracleJumpingSet)->Arg(1)->Arg(2);

}  // namespace
BENCHMARK_MAIN();
