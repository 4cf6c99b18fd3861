#include "freegog/tree_ball.hpp"

#include <algorithm>
#include <set>

namespace freegog {

TreeBall::TreeBall(GogPtr gog, int base, int radius, int rep_cap)
    : gog_(std::move(gog)), base_(base), radius_(radius), rep_cap_(rep_cap) {
  gog_->require_free("tree ball");
  if (radius < 0 || radius > 6) throw Error("tree ball radius must lie in 0..6");
  const auto& g = *gog_;

  // Coset representatives of G_iota(e) / <alpha_ebar(z)> up to the cap.
  std::vector<std::vector<Word>> reps(static_cast<std::size_t>(g.directed_edge_count()));
  for (int e = 0; e < g.directed_edge_count(); ++e) {
    const Word& c = g.alpha(GraphOfGroups::bar(e));
    for (const auto& w : enumerate_words(g.vertex(g.iota(e)).alphabet, rep_cap)) {
      if (coset_minimum(w, c, CosetSide::kLeft).first == w) reps[e].push_back(w);
    }
  }

  vertices_.push_back({});
  parents_.push_back(-1);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].depth() == radius_) continue;
    const int end = vertices_[i].edges.empty() ? base_ : g.tau(vertices_[i].edges.back());
    for (int e = 0; e < g.directed_edge_count(); ++e) {
      if (g.iota(e) != end) continue;
      for (const auto& r : reps[e]) {
        if (r.empty() && !vertices_[i].edges.empty() && e == GraphOfGroups::bar(vertices_[i].edges.back())) continue;
        TreeVertex child = vertices_[i];
        child.reps.push_back(r);
        child.edges.push_back(e);
        vertices_.push_back(std::move(child));
        parents_.push_back(static_cast<int>(i));
      }
    }
  }
}

TreeVertex TreeBall::normalize(const PathWord& p) const {
  if (p.start() != base_) throw Error("tree ball: path does not start at the centre");
  const PathWord r = britton_reduce(p);
  const auto& g = *gog_;
  TreeVertex out;
  Word current = r.elements().front();
  for (std::size_t i = 0; i < r.edges().size(); ++i) {
    const int e = r.edges()[i];
    // current == rep * c^-k with rep == current * c^k.
    const auto [rep, k] = coset_minimum(current, g.alpha(GraphOfGroups::bar(e)), CosetSide::kLeft);
    out.reps.push_back(rep);
    out.edges.push_back(e);
    current = g.alpha(e).pow(-k) * r.elements()[i + 1];
  }
  return out;
}

PathWord TreeBall::path(const TreeVertex& x) const {
  PathWord p(gog_, base_);
  for (std::size_t i = 0; i < x.edges.size(); ++i) {
    p.push_element(x.reps[i]);
    p.push_edge(x.edges[i]);
  }
  return p;
}

int TreeBall::distance(const TreeVertex& x, const TreeVertex& y) {
  std::size_t common = 0;
  while (common < x.edges.size() && common < y.edges.size() && x.edges[common] == y.edges[common] &&
         x.reps[common] == y.reps[common]) {
    ++common;
  }
  return static_cast<int>(x.edges.size() + y.edges.size() - 2 * common);
}

bool TreeBall::fits(const PathWord& loop) const {
  const TreeVertex image = normalize(loop);
  if (image.depth() > radius_) return false;
  return std::all_of(image.reps.begin(), image.reps.end(),
                     [&](const Word& r) { return static_cast<int>(r.size()) <= rep_cap_; });
}

int TreeBall::min_displacement(const PathWord& loop) const {
  int best = -1;
  for (const auto& x : vertices_) {
    const int d = distance(x, act(loop, x));
    if (best < 0 || d < best) best = d;
    if (best == 0) break;
  }
  return best;
}

bool TreeBall::is_tree() const {
  std::set<std::pair<std::vector<int>, std::vector<std::string>>> seen;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    std::vector<std::string> reps;
    for (const auto& r : vertices_[i].reps) reps.push_back(r.str());
    if (!seen.insert({vertices_[i].edges, reps}).second) return false;
    if (parents_[i] >= 0 && distance(vertices_[i], vertices_[parents_[i]]) != 1) return false;
    if (normalize(path(vertices_[i])) != vertices_[i]) return false;
  }
  return true;
}

}  // namespace freegog
