#include <benchmark/benchmark.h>

#include "multitype/io.hpp"
#include "multitype/kolar.hpp"
#include "multitype/levi.hpp"
#include "multitype/mixed_polynomial.hpp"

using namespace multitype;

namespace {

const std::vector<std::string> kNames{"z1", "z2", "z3", "z4"};

std::vector<Polynomial> four_variable_ideal() {
  std::vector<Polynomial> gens;
  for (const char* t : {"(z1 + z2 z4)^2 + z2^4", "(z1 + z2 z3^2)^2", "z2^9", "z3^10", "z4^12"}) {
    gens.push_back(parse_polynomial(t, kNames));
  }
  return gens;
}

void BM_RunFourVariables(benchmark::State& state) {
  const auto gens = four_variable_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(run(gens));
}
BENCHMARK(BM_RunFourVariables)->Unit(benchmark::kMillisecond);

void BM_ExpandSos(benchmark::State& state) {
  const auto gens = four_variable_ideal();
  for (auto _ : state) benchmark::DoNotOptimize(expand_sos(gens));
}
BENCHMARK(BM_ExpandSos)->Unit(benchmark::kMicrosecond);

void BM_Determinant(benchmark::State& state) {
  const std::vector<std::string> names{"z1", "z2", "z3", "z4"};
  std::vector<Polynomial> gens;
  for (const char* t : {"z1 + z2^2", "z2 + z3^2", "z3 + z4^2", "z4^3 + z1 z2"}) {
    gens.push_back(parse_polynomial(t, names));
  }
  const LeviMatrix a = levi(expand_sos(gens));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(a));
}
BENCHMARK(BM_Determinant)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
