#include <benchmark/benchmark.h>

#include "equisym/catalog.hpp"
#include "equisym/orbits.hpp"
#include "equisym/repr.hpp"
#include "equisym/scanner.hpp"

using namespace equisym;

namespace {

const Signature kSix2(0, {2, 2, 2, 2, 2, 2});

void BM_EnumerateVectors(benchmark::State& state) {
  const Group d = make_dihedral(int(state.range(0)));
  for (auto _ : state) {
    auto result = enumerate_vectors(d, kSix2);
    benchmark::DoNotOptimize(result.vectors.data());
    state.counters["vectors"] = double(result.vectors.size());
  }
}
BENCHMARK(BM_EnumerateVectors)->Arg(5)->Arg(7)->Arg(9);

void BM_OrbitClosure(benchmark::State& state) {
  const int q = int(state.range(0));
  const Group d = make_dihedral(q);
  std::vector<int> periods(6, 2);
  periods.push_back(q);
  const Signature sig(0, periods);
  for (auto _ : state) {
    auto report = compute_orbits(d, sig);
    benchmark::DoNotOptimize(report.orbits.data());
    state.counters["vectors"] = double(report.total_vectors);
  }
}
BENCHMARK(BM_OrbitClosure)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_AutomorphismsBruteForce(benchmark::State& state) {
  // Klein four-group through the external-table path.
  const Group klein = make_external(
      "klein", {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}, {1, 2});
  for (auto _ : state) {
    auto auts = automorphisms(klein);
    benchmark::DoNotOptimize(auts.data());
  }
}
BENCHMARK(BM_AutomorphismsBruteForce);

void BM_ArithmeticMaxRow(benchmark::State& state) {
  const long long genus = state.range(0);
  for (auto _ : state) {
    auto row = arithmetic_max(genus, 3);
    benchmark::DoNotOptimize(row.order);
  }
}
BENCHMARK(BM_ArithmeticMaxRow)->Arg(10)->Arg(30);

void BM_FactorDimensions(benchmark::State& state) {
  const Group d = make_dihedral(13);
  const auto v = GeneratingVector::parse(d, kSix2, "-;s,s,s,s,sr,sr");
  for (auto _ : state) {
    auto report = factor_dimensions(v);
    benchmark::DoNotOptimize(report.factors.data());
  }
}
BENCHMARK(BM_FactorDimensions);

void BM_OracleCrossCheck(benchmark::State& state) {
  const Group d = make_dihedral(7);
  for (auto _ : state) {
    auto res = oracle_crosscheck(d, kSix2, {"<r>", "<s>", "<sr>", "G", "1"});
    benchmark::DoNotOptimize(res.mismatches);
  }
}
BENCHMARK(BM_OracleCrossCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
