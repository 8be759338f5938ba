#include <benchmark/benchmark.h>

#include <random>

#include "artinlab/complex.hpp"
#include "artinlab/oracle.hpp"

using namespace artinlab;

namespace {

DefiningGraph graph(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return DefiningGraph(names, edges);
}

Word random_word(std::mt19937& rng, std::size_t n, std::size_t len) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < len; ++i) {
    letters.push_back({static_cast<Generator>(rng() % n), static_cast<bool>(rng() % 2)});
  }
  return Word(letters);
}

void BM_RaagNormalForm(benchmark::State& state) {
  const auto g = graph(6, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {4, 5, 2}, {0, 5, 2}});
  const WordOracle oracle(g, OracleMode::Raag);
  std::mt19937 rng(1);
  const Word w = random_word(rng, 6, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle.reduce(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RaagNormalForm)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_DihedralNormalForm(benchmark::State& state) {
  const auto g = graph(2, {{0, 1, 5}});
  const WordOracle oracle(g, OracleMode::Dihedral);
  std::mt19937 rng(2);
  const Word w = random_word(rng, 2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle.reduce(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DihedralNormalForm)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_ShadowNormalForm(benchmark::State& state) {
  const auto g = graph(4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 6}});
  const WordOracle oracle(g, OracleMode::CoxeterShadow);
  std::mt19937 rng(3);
  const Word w = random_word(rng, 4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle.reduce(w));
}
BENCHMARK(BM_ShadowNormalForm)->RangeMultiplier(2)->Range(8, 64);

void BM_DevelopBall(benchmark::State& state) {
  const auto g = graph(4, {{0, 1, 2}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(develop_ball(g, OracleMode::Raag, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_DevelopBall)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_Locally6Large(benchmark::State& state) {
  const auto g = graph(4, {{0, 1, 2}});
  const auto x = develop_ball(g, OracleMode::Raag, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(locally_6_large_check(x));
}
BENCHMARK(BM_Locally6Large)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
