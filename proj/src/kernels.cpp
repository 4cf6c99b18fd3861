#include "freegog/kernels.hpp"

#include <algorithm>

namespace freegog::kernels {

namespace {

std::vector<std::vector<long>> exponent_grid(int edges, int bound) {
  std::vector<std::vector<long>> grid{{}};
  for (int k = 0; k < edges; ++k) {
    std::vector<std::vector<long>> next;
    for (const auto& v : grid) {
      for (long n = -bound; n <= bound; ++n) {
        auto w = v;
        w.push_back(n);
        next.push_back(std::move(w));
      }
    }
    grid = std::move(next);
  }
  return grid;
}

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

bool inner_check(const AlphabetPtr& alphabet, const std::vector<Word>& images, int max_length) {
  const auto fast = inner_witness(alphabet, images);
  const auto slow = brute_force_inner(alphabet, images, max_length);
  if (fast.has_value() != slow.has_value()) return false;
  if (!fast) return true;
  for (int i = 0; i < alphabet->rank(); ++i) {
    if (conjugate(Word::generator(alphabet, i), *fast) != images[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<Word> fixed_words_serial(const FreeAut& f, int max_length) {
  std::vector<Word> out;
  for (const auto& w : enumerate_words(f.source(), max_length)) {
    if (f.apply(w) == w) out.push_back(w);
  }
  return out;
}

std::vector<Word> fixed_words_parallel(const FreeAut& f, int max_length) {
  const auto words = enumerate_words(f.source(), max_length);
  std::vector<char> fixed(words.size(), 0);
  const auto n = static_cast<long>(words.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) fixed[i] = f.apply(words[i]) == words[i];
  std::vector<Word> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (fixed[i]) out.push_back(words[i]);
  }
  return out;
}

TwistRankCertificate twist_independence_serial(const Pi1& pi1, int bound) {
  const auto& gog = pi1.gog();
  TwistRankCertificate cert;
  cert.rank = gog->geometric_edge_count();
  cert.bound = bound;
  const auto grid = exponent_grid(cert.rank, bound);
  std::vector<FreeAut> twists;
  for (const auto& n : grid) twists.push_back(twist_aut({gog, n}, pi1));
  for (const auto& [i, j] : all_pairs(grid.size())) {
    ++cert.pairs_checked;
    if (outer_equal(twists[i], twists[j])) cert.collisions.emplace_back(grid[i], grid[j]);
  }
  return cert;
}

TwistRankCertificate twist_independence_parallel(const Pi1& pi1, int bound) {
  const auto& gog = pi1.gog();
  TwistRankCertificate cert;
  cert.rank = gog->geometric_edge_count();
  cert.bound = bound;
  const auto grid = exponent_grid(cert.rank, bound);
  std::vector<std::optional<FreeAut>> twists(grid.size());
  const auto n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) twists[i] = twist_aut({gog, grid[i]}, pi1);
  const auto pairs = all_pairs(grid.size());
  std::vector<char> equal(pairs.size(), 0);
  const auto m = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long p = 0; p < m; ++p) equal[p] = outer_equal(*twists[pairs[p].first], *twists[pairs[p].second]);
  cert.pairs_checked = m;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (equal[p]) cert.collisions.emplace_back(grid[pairs[p].first], grid[pairs[p].second]);
  }
  return cert;
}

std::vector<InvarianceFailure> translation_invariance_serial(const std::vector<GoGAut>& auts,
                                                             const std::vector<PathWord>& loops) {
  std::vector<InvarianceFailure> out;
  for (std::size_t a = 0; a < auts.size(); ++a) {
    for (std::size_t l = 0; l < loops.size(); ++l) {
      const int before = translation_length(loops[l]);
      const int after = translation_length(auts[a].apply(loops[l]));
      if (before != after) out.push_back({a, l, before, after});
    }
  }
  return out;
}

std::vector<InvarianceFailure> translation_invariance_parallel(const std::vector<GoGAut>& auts,
                                                               const std::vector<PathWord>& loops) {
  std::vector<int> before(loops.size());
  const auto nl = static_cast<long>(loops.size());
#pragma omp parallel for schedule(dynamic)
  for (long l = 0; l < nl; ++l) before[l] = translation_length(loops[l]);
  const auto total = static_cast<long>(auts.size() * loops.size());
  std::vector<int> after(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 16)
  for (long t = 0; t < total; ++t) {
    after[t] = translation_length(auts[t / nl].apply(loops[t % nl]));
  }
  std::vector<InvarianceFailure> out;
  for (long t = 0; t < total; ++t) {
    const auto a = static_cast<std::size_t>(t / nl);
    const auto l = static_cast<std::size_t>(t % nl);
    if (before[l] != after[t]) out.push_back({a, l, before[l], after[t]});
  }
  return out;
}

std::vector<int> ball_min_displacement_serial(const TreeBall& ball, const std::vector<PathWord>& loops) {
  std::vector<int> out;
  for (const auto& loop : loops) out.push_back(ball.min_displacement(loop));
  return out;
}

std::vector<int> ball_min_displacement_parallel(const TreeBall& ball, const std::vector<PathWord>& loops) {
  std::vector<int> out(loops.size());
  const auto n = static_cast<long>(loops.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = ball.min_displacement(loops[i]);
  return out;
}

std::optional<Word> brute_force_inner(const AlphabetPtr& alphabet, const std::vector<Word>& images, int max_length) {
  for (const auto& g : enumerate_words(alphabet, max_length)) {
    bool ok = true;
    for (int i = 0; i < alphabet->rank() && ok; ++i) ok = conjugate(Word::generator(alphabet, i), g) == images[i];
    if (ok) return g;
  }
  return std::nullopt;
}

std::vector<std::size_t> inner_oracle_disagreements_serial(const AlphabetPtr& alphabet,
                                                           const std::vector<std::vector<Word>>& samples,
                                                           int max_length) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!inner_check(alphabet, samples[i], max_length)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> inner_oracle_disagreements_parallel(const AlphabetPtr& alphabet,
                                                             const std::vector<std::vector<Word>>& samples,
                                                             int max_length) {
  std::vector<char> bad(samples.size(), 0);
  const auto n = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) bad[i] = !inner_check(alphabet, samples[i], max_length);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (bad[i]) out.push_back(i);
  }
  return out;
}

}  // namespace freegog::kernels
