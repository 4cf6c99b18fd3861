#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "freegog/free_aut.hpp"
#include "freegog/gog_aut.hpp"
#include "freegog/pi1.hpp"
#include "freegog/tree_ball.hpp"

/// Grid and sampling workloads.  Each has a serial reference and an OpenMP
/// version; both return identical results in identical order.
namespace freegog::kernels {

/// Words of length <= max_length fixed by f, in shortlex order.
std::vector<Word> fixed_words_serial(const FreeAut& f, int max_length);
std::vector<Word> fixed_words_parallel(const FreeAut& f, int max_length);

/// Pairwise outer inequality of twists with exponents in [-bound, bound].
TwistRankCertificate twist_independence_serial(const Pi1& pi1, int bound);
TwistRankCertificate twist_independence_parallel(const Pi1& pi1, int bound);

struct InvarianceFailure {
  std::size_t aut;
  std::size_t loop;
  int before;
  int after;
  bool operator==(const InvarianceFailure&) const = default;
};

/// Loops whose translation length changes under an automorphism.
std::vector<InvarianceFailure> translation_invariance_serial(const std::vector<GoGAut>& auts,
                                                             const std::vector<PathWord>& loops);
std::vector<InvarianceFailure> translation_invariance_parallel(const std::vector<GoGAut>& auts,
                                                               const std::vector<PathWord>& loops);

/// min over the ball of d(x, loop.x), per loop.
std::vector<int> ball_min_displacement_serial(const TreeBall& ball, const std::vector<PathWord>& loops);
std::vector<int> ball_min_displacement_parallel(const TreeBall& ball, const std::vector<PathWord>& loops);

/// g with x^g == images[x] for every generator, by scanning every word of
/// length <= max_length.
std::optional<Word> brute_force_inner(const AlphabetPtr& alphabet, const std::vector<Word>& images, int max_length);

/// Indices of samples where inner_witness and the brute-force scan disagree
/// on existence, or where a returned witness fails.
std::vector<std::size_t> inner_oracle_disagreements_serial(const AlphabetPtr& alphabet,
                                                           const std::vector<std::vector<Word>>& samples,
                                                           int max_length);
std::vector<std::size_t> inner_oracle_disagreements_parallel(const AlphabetPtr& alphabet,
                                                             const std::vector<std::vector<Word>>& samples,
                                                             int max_length);

}  // namespace freegog::kernels
