#include <doctest.h>

#include "fixtures.hpp"
#include "freegog/kernels.hpp"
#include "freegog/random.hpp"

using namespace freegog;

TEST_CASE("fixed_words: serial == parallel") {
  const auto& s = fixtures::s4();
  for (const char* name : {"phi", "phi2", "D11"}) {
    const auto f = s.resolve_aut(name);
    CHECK(kernels::fixed_words_serial(f, 5) == kernels::fixed_words_parallel(f, 5));
  }
  CHECK(kernels::fixed_words_serial(s.resolve_aut("phi2"), 4).size() == 17);
}

TEST_CASE("twist_independence: serial == parallel") {
  const auto& pi1 = fixtures::s4().fundamental_group();
  const auto a = kernels::twist_independence_serial(pi1, 2);
  const auto b = kernels::twist_independence_parallel(pi1, 2);
  CHECK(a.rank == b.rank);
  CHECK(a.pairs_checked == b.pairs_checked);
  CHECK(a.collisions == b.collisions);
  CHECK(a.pairs_checked == 300);
}

TEST_CASE("translation_invariance: serial == parallel") {
  const auto& s = fixtures::s4();
  Sampler rng(3);
  std::vector<GoGAut> auts{s.gogaut("R"), s.gogaut("Psi"), twist_gog_aut({s.gog, {2, -1}})};
  std::vector<PathWord> loops;
  for (int i = 0; i < 60; ++i) loops.push_back(rng.loop(s.gog, s.gog->base(), 10, 3));
  const auto serial = kernels::translation_invariance_serial(auts, loops);
  CHECK(serial == kernels::translation_invariance_parallel(auts, loops));
  CHECK(serial.empty());
}

TEST_CASE("ball_min_displacement: serial == parallel") {
  const auto gog = fixtures::three_vertex();
  const TreeBall ball(gog, gog->base(), 4, 1);
  Sampler rng(6);
  std::vector<PathWord> loops;
  for (int i = 0; i < 20; ++i) loops.push_back(rng.loop(gog, gog->base(), 4, 1));
  const auto serial = kernels::ball_min_displacement_serial(ball, loops);
  CHECK(serial == kernels::ball_min_displacement_parallel(ball, loops));
  for (std::size_t i = 0; i < loops.size(); ++i) {
    if (ball.fits(loops[i])) CHECK(serial[i] == translation_length(loops[i]));
  }
}

TEST_CASE("inner_oracle: serial == parallel") {
  Sampler rng(10);
  const auto A = fixtures::ab();
  std::vector<std::vector<Word>> samples;
  for (int i = 0; i < 80; ++i) samples.push_back({rng.word_upto(A, 4), rng.word_upto(A, 4)});
  const auto serial = kernels::inner_oracle_disagreements_serial(A, samples, 4);
  CHECK(serial == kernels::inner_oracle_disagreements_parallel(A, samples, 4));
  CHECK(serial.empty());
}
