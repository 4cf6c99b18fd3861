#pragma once

#include <vector>

#include "freegog/gog.hpp"

namespace freegog {

/// Vertex of the Bass-Serre tree: the class of a path from the base modulo
/// the group of its endpoint, in normal form r_0 e_1 r_1 e_2 ... r_{n-1} e_n
/// with r_i the shortlex-least element of r_i <alpha_{ebar_{i+1}}(z)>.
struct TreeVertex {
  std::vector<Word> reps;
  std::vector<int> edges;

  int depth() const { return static_cast<int>(edges.size()); }
  bool operator==(const TreeVertex& other) const { return edges == other.edges && reps == other.reps; }
};

/// Ball of the given radius about the base vertex, restricted to coset
/// representatives of length at most rep_cap.  Used as an oracle only.
class TreeBall {
 public:
  TreeBall(GogPtr gog, int base, int radius = 6, int rep_cap = 1);

  const GogPtr& gog() const { return gog_; }
  int base() const { return base_; }
  int radius() const { return radius_; }
  int rep_cap() const { return rep_cap_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const TreeVertex& vertex(int i) const { return vertices_.at(i); }
  /// Index of the parent of vertex i; -1 for the centre.
  int parent(int i) const { return parents_.at(i); }

  TreeVertex normalize(const PathWord& p) const;
  PathWord path(const TreeVertex& x) const;
  static int distance(const TreeVertex& x, const TreeVertex& y);
  TreeVertex act(const PathWord& loop, const TreeVertex& x) const { return normalize(loop * path(x)); }

  /// Whether the geodesic from the centre to loop.centre lies in the ball.
  bool fits(const PathWord& loop) const;
  /// min over ball vertices x of d(x, loop.x).
  int min_displacement(const PathWord& loop) const;

  /// Checks that vertices are distinct and each is one edge from its parent.
  bool is_tree() const;

 private:
  GogPtr gog_;
  int base_;
  int radius_;
  int rep_cap_;
  std::vector<TreeVertex> vertices_;
  std::vector<int> parents_;
};

}  // namespace freegog
