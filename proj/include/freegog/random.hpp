#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "freegog/free_aut.hpp"
#include "freegog/gog.hpp"

namespace freegog {

/// Seeded sampler for property checks.  Deterministic for a given seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 0) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Uniform reduced word of exactly `length` letters.
  Word word(const AlphabetPtr& alphabet, int length);
  Word word_upto(const AlphabetPtr& alphabet, int max_length) { return word(alphabet, uniform(0, max_length)); }
  /// Nonempty, not a proper power.
  Word non_power(const AlphabetPtr& alphabet, int max_length);

  /// Loop at `base` with at most max_edges edges and vertex elements of
  /// length at most max_element.
  PathWord loop(const GogPtr& gog, int base, int max_edges, int max_element);

  /// Product of `moves` random Nielsen moves.
  FreeAut automorphism(const AlphabetPtr& alphabet, int moves);

  /// Connected graph of groups on three rank-4 vertices with two or three
  /// geometric edges and a single-letter image on the tau side of each edge.
  GogPtr three_vertex_gog(int index);

 private:
  std::mt19937_64 rng_;
};

}  // namespace freegog
