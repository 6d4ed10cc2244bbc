#include <benchmark/benchmark.h>

#include "eqsig/bounds.hpp"
#include "eqsig/corpus.hpp"
#include "eqsig/random.hpp"
#include "eqsig/signature.hpp"

using namespace eqsig;

namespace {

std::vector<SymIntMatrix> nonsingular_matrices(std::size_t size, std::size_t count) {
  std::vector<SymIntMatrix> out;
  for (std::uint64_t i = 0; out.size() < count; ++i) {
    Rng rng(trial_seed(1, size, i));
    auto m = random_symmetric(rng, size, -20, 20);
    if (det(m) != 0) out.push_back(std::move(m));
  }
  return out;
}

void BM_Inertia(benchmark::State& state) {
  const auto ms = nonsingular_matrices(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(inertia(ms[i++ % ms.size()]));
}
BENCHMARK(BM_Inertia)->Arg(4)->Arg(8)->Arg(12)->Arg(24);

void BM_SignatureJones(benchmark::State& state) {
  const auto ms = nonsingular_matrices(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(signature_jones(ms[i++ % ms.size()]));
}
BENCHMARK(BM_SignatureJones)->Arg(4)->Arg(8)->Arg(12)->Arg(24);

void BM_Det(benchmark::State& state) {
  const auto ms = nonsingular_matrices(static_cast<std::size_t>(state.range(0)), 32);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(det(ms[i++ % ms.size()]));
}
BENCHMARK(BM_Det)->Arg(4)->Arg(8)->Arg(12)->Arg(24);

void BM_EquivariantSignature940(benchmark::State& state) {
  const auto& g = std::get<EquivariantGoeritz>(find_corpus_entry("9_40")->document.payload);
  for (auto _ : state) benchmark::DoNotOptimize(equivariant_signature(g));
}
BENCHMARK(BM_EquivariantSignature940);

void BM_VerifySequence(benchmark::State& state) {
  const auto& g = std::get<EquivariantGoeritz>(find_corpus_entry("9_40")->document.payload);
  const std::vector<MoveSpec> moves{TypeA2{1, 4, 1, CrossingColor::Bicolored, 1, false},
                                    TypeA1{4, 1, CrossingColor::Unicolored, std::nullopt},
                                    TypeC{1, CrossingColor::Bicolored}};
  for (auto _ : state) benchmark::DoNotOptimize(verify_sequence(g, moves));
}
BENCHMARK(BM_VerifySequence);

}  // namespace
BENCHMARK_MAIN();
