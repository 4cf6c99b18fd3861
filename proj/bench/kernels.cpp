#include <benchmark/benchmark.h>

#include "freegog/kernels.hpp"
#include "freegog/random.hpp"
#include "freegog/section4.hpp"

using namespace freegog;

namespace {

const Scenario& s4() {
  static const Scenario s = section4_scenario("a*b");
  return s;
}

template <bool kParallel>
void BM_FixedWords(benchmark::State& state) {
  const auto f = s4().resolve_aut("phi2");
  for (auto _ : state) {
    auto out = kParallel ? kernels::fixed_words_parallel(f, static_cast<int>(state.range(0)))
                         : kernels::fixed_words_serial(f, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(out);
  }
}

template <bool kParallel>
void BM_TwistIndependence(benchmark::State& state) {
  const auto& pi1 = s4().fundamental_group();
  for (auto _ : state) {
    auto out = kParallel ? kernels::twist_independence_parallel(pi1, static_cast<int>(state.range(0)))
                         : kernels::twist_independence_serial(pi1, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(out);
  }
}

template <bool kParallel>
void BM_TranslationInvariance(benchmark::State& state) {
  const auto& s = s4();
  Sampler rng(0);
  std::vector<GoGAut> auts{s.gogaut("R"), s.gogaut("Psi")};
  for (long r = -3; r <= 3; ++r) auts.push_back(twist_gog_aut({s.gog, {r, -r}}));
  std::vector<PathWord> loops;
  for (int i = 0; i < state.range(0); ++i) loops.push_back(rng.loop(s.gog, s.gog->base(), 12, 3));
  for (auto _ : state) {
    auto out = kParallel ? kernels::translation_invariance_parallel(auts, loops)
                         : kernels::translation_invariance_serial(auts, loops);
    benchmark::DoNotOptimize(out);
  }
}

template <bool kParallel>
void BM_BallDisplacement(benchmark::State& state) {
  const auto gog = s4().gog;
  const TreeBall ball(gog, gog->base(), 6, 1);
  Sampler rng(0);
  std::vector<PathWord> loops;
  for (int i = 0; i < state.range(0); ++i) loops.push_back(rng.loop(gog, gog->base(), 6, 1));
  for (auto _ : state) {
    auto out = kParallel ? kernels::ball_min_displacement_parallel(ball, loops)
                         : kernels::ball_min_displacement_serial(ball, loops);
    benchmark::DoNotOptimize(out);
  }
}

template <bool kParallel>
void BM_InnerOracle(benchmark::State& state) {
  const auto A = Alphabet::make({"a", "b"});
  Sampler rng(0);
  std::vector<std::vector<Word>> samples;
  for (int i = 0; i < state.range(0); ++i) samples.push_back({rng.word_upto(A, 4), rng.word_upto(A, 4)});
  for (auto _ : state) {
    auto out = kParallel ? kernels::inner_oracle_disagreements_parallel(A, samples, 4)
                         : kernels::inner_oracle_disagreements_serial(A, samples, 4);
    benchmark::DoNotOptimize(out);
  }
}

}  // namespace

BENCHMARK(BM_FixedWords<false>)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedWords<true>)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwistIndependence<false>)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwistIndependence<true>)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TranslationInvariance<false>)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TranslationInvariance<true>)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallDisplacement<false>)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallDisplacement<true>)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InnerOracle<false>)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InnerOracle<true>)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
