#include "freegog/random.hpp"

#include <queue>

namespace freegog {

Word Sampler::word(const AlphabetPtr& alphabet, int length) {
  std::vector<Letter> letters;
  const int choices = 2 * alphabet->rank();
  while (static_cast<int>(letters.size()) < length) {
    const int pick = uniform(0, choices - 1);
    const Letter l = make_letter(pick / 2, pick % 2 == 0 ? 1 : -1);
    if (!letters.empty() && letters.back() == -l) continue;
    letters.push_back(l);
  }
  return Word(alphabet, std::move(letters));
}

Word Sampler::non_power(const AlphabetPtr& alphabet, int max_length) {
  for (;;) {
    Word w = word(alphabet, uniform(1, max_length));
    if (!is_proper_power(w)) return w;
  }
}

PathWord Sampler::loop(const GogPtr& gog, int base, int max_edges, int max_element) {
  const auto& g = *gog;
  // Distances to the base and a shortest route back.
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> toward(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<int> queue;
  dist[base] = 0;
  queue.push(base);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int e = 0; e < g.directed_edge_count(); ++e) {
      if (g.iota(e) == v && dist[g.tau(e)] < 0) {
        dist[g.tau(e)] = dist[v] + 1;
        toward[g.tau(e)] = GraphOfGroups::bar(e);
        queue.push(g.tau(e));
      }
    }
  }

  auto element = [&](int v) { return word_upto(g.vertex(v).alphabet, max_element); };
  const int budget = uniform(0, max_edges);
  PathWord p = PathWord::vertex_element(gog, base, element(base));
  int used = 0;
  while (true) {
    std::vector<int> options;
    for (int e = 0; e < g.directed_edge_count(); ++e) {
      if (g.iota(e) == p.end() && used + 1 + dist[g.tau(e)] <= budget) options.push_back(e);
    }
    if (options.empty()) break;
    const int e = options[static_cast<std::size_t>(uniform(0, static_cast<int>(options.size()) - 1))];
    p.push_edge(e);
    p.push_element(element(p.end()));
    ++used;
  }
  while (p.end() != base) {
    p.push_edge(toward[p.end()]);
    p.push_element(element(p.end()));
  }
  return p;
}

FreeAut Sampler::automorphism(const AlphabetPtr& alphabet, int moves) {
  const int n = alphabet->rank();
  FreeAut f = FreeAut::identity(alphabet);
  for (int m = 0; m < moves; ++m) {
    std::vector<Word> forward, backward;
    for (int i = 0; i < n; ++i) {
      forward.push_back(Word::generator(alphabet, i));
      backward.push_back(Word::generator(alphabet, i));
    }
    const int i = uniform(0, n - 1);
    const int kind = n > 1 ? uniform(0, 2) : 0;
    if (kind == 0) {
      forward[i] = backward[i] = Word::generator(alphabet, i, -1);
    } else {
      int j = uniform(0, n - 2);
      if (j >= i) ++j;
      const Word xi = Word::generator(alphabet, i);
      const Word xj = Word::generator(alphabet, j, uniform(0, 1) ? 1 : -1);
      if (kind == 1) {
        forward[i] = xi * xj;
        backward[i] = xi * xj.inverse();
      } else {
        forward[i] = xj * xi;
        backward[i] = xj.inverse() * xi;
      }
    }
    f = compose(f, FreeAut(alphabet, std::move(forward), std::move(backward)));
  }
  return f;
}

GogPtr Sampler::three_vertex_gog(int index) {
  const std::string suffix = std::to_string(index);
  const char* const vertex_names[] = {"p", "q", "r"};
  GraphOfGroups::Builder builder;
  std::vector<AlphabetPtr> alphabets;
  for (int v = 0; v < 3; ++v) {
    std::vector<std::string> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(std::string(1, static_cast<char>('a' + 4 * v + i)) + suffix);
    alphabets.push_back(Alphabet::make(gens));
    builder.vertex(vertex_names[v] + suffix, gens);
  }
  // Each edge takes a fresh generator (index 0 or 1) of its tau vertex as its
  // image there and a word in generators 2 and 3 of its iota vertex, so every
  // relator can be eliminated.
  std::vector<int> next_free(3, 0);
  int edge_id = 0;
  auto add_edge = [&](int from, int to) {
    const int fresh = next_free[to]++;
    const auto tail = Alphabet::make({alphabets[from]->name(2), alphabets[from]->name(3)});
    const Word sub = non_power(tail, 3);
    builder.edge("e" + std::to_string(edge_id++) + "_" + suffix, vertex_names[from] + suffix,
                 vertex_names[to] + suffix, {sub.str()}, {alphabets[to]->name(fresh)});
  };
  // A spanning tree, then an extra edge or loop.
  if (uniform(0, 1)) {
    add_edge(0, 1);
    add_edge(2, 1);
  } else {
    add_edge(1, 0);
    add_edge(1, 2);
  }
  if (uniform(0, 1)) {
    const int a = uniform(0, 2);
    int b = uniform(0, 2);
    while (next_free[b] >= 2) b = (b + 1) % 3;
    add_edge(a, b);
  }
  builder.base(vertex_names[uniform(0, 2)] + suffix);
  return builder.build();
}

}  // namespace freegog
