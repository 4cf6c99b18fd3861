#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freegog/word.hpp"

namespace freegog {

/// Finite graph of groups with finitely generated free vertex groups and
/// (for free vertices) infinite cyclic edge groups.
///
/// Geometric edge k has directed edges 2k (as declared, iota -> tau) and
/// 2k+1 (its reverse, printed with a leading `~`).  alpha(e) lies in the
/// group of tau(e).
class GraphOfGroups {
 public:
  struct Vertex {
    std::string name;
    AlphabetPtr alphabet;
    bool free = true;
  };

  struct DirectedEdge {
    std::string name;
    int from = 0;
    int to = 0;
    /// Images of the edge-group generators in the group of `to`.
    std::vector<Word> images;
  };

  class Builder {
   public:
    Builder& vertex(std::string name, std::vector<std::string> generators, bool free = true);
    /// at_from and at_to are word texts in the groups of `from` and `to`, one
    /// per edge-group generator.
    Builder& edge(std::string name, std::string_view from, std::string_view to, std::vector<std::string> at_from,
                  std::vector<std::string> at_to);
    Builder& base(std::string_view vertex);
    Builder& allow_non_efficient(bool allow = true);
    std::shared_ptr<const GraphOfGroups> build() const;

   private:
    struct PendingEdge {
      std::string name, from, to;
      std::vector<std::string> at_from, at_to;
    };
    std::vector<Vertex> vertices_;
    std::vector<PendingEdge> edges_;
    std::string base_;
    bool allow_non_efficient_ = false;
  };

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int geometric_edge_count() const { return static_cast<int>(edges_.size()) / 2; }
  int directed_edge_count() const { return static_cast<int>(edges_.size()); }

  const Vertex& vertex(int v) const { return vertices_.at(v); }
  const DirectedEdge& edge(int e) const { return edges_.at(e); }
  int find_vertex(std::string_view name) const;
  /// Accepts `name` or `~name`; -1 if absent.
  int find_edge(std::string_view name) const;

  static int bar(int e) { return e ^ 1; }
  int iota(int e) const { return edges_.at(e).from; }
  int tau(int e) const { return edges_.at(e).to; }
  /// alpha_e(z) for a cyclic edge group.
  const Word& alpha(int e) const;

  int base() const { return base_; }
  /// Every vertex group free, every edge group cyclic.
  bool all_free() const { return all_free_; }
  /// Every edge image nonempty and not a proper power.
  bool efficient() const { return efficient_; }
  /// Throws Error naming `operation` unless all_free().
  void require_free(std::string_view operation) const;

  /// The vertex whose alphabet has a generator called `name`; -1 if none.
  int vertex_of_generator(std::string_view name) const;

 private:
  GraphOfGroups() = default;

  std::vector<Vertex> vertices_;
  std::vector<DirectedEdge> edges_;
  int base_ = 0;
  bool all_free_ = true;
  bool efficient_ = true;
};

using GogPtr = std::shared_ptr<const GraphOfGroups>;

/// Element g0 e1 g1 ... en gn of the path group, with g_i in the group of
/// the vertex reached after e_i.
class PathWord {
 public:
  PathWord(GogPtr gog, int start);
  static PathWord vertex_element(GogPtr gog, int v, Word w);
  static PathWord edge(GogPtr gog, int e);

  const GogPtr& gog() const { return gog_; }
  int start() const { return start_; }
  int end() const;
  bool is_loop() const { return start() == end(); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& edges() const { return edges_; }
  const std::vector<Word>& elements() const { return elements_; }

  /// Requires end() == other.start().
  PathWord operator*(const PathWord& other) const;
  PathWord& operator*=(const PathWord& other) { return *this = *this * other; }
  PathWord inverse() const;
  PathWord pow(long n) const;

  /// Appends an edge; an identity element follows it.
  void push_edge(int e);
  /// Multiplies the last element on the right.
  void push_element(const Word& w);

  /// Structural equality of the sequence, not equality in the path group.
  bool operator==(const PathWord& other) const;
  bool operator!=(const PathWord& other) const { return !(*this == other); }

  std::string str() const;

 private:
  GogPtr gog_;
  int start_;
  std::vector<Word> elements_;
  std::vector<int> edges_;
};

PathWord britton_reduce(const PathWord& p);
bool is_britton_reduced(const PathWord& p);
bool is_trivial(const PathWord& p);
/// Equality in pi_1(G, base): britton_reduce(p q^-1) is trivial.
bool pi1_equal(const PathWord& p, const PathWord& q);
/// Number of edges of a cyclically Britton-reduced conjugate of the loop p.
int translation_length(const PathWord& p);

/// Parses e.g. "~e_u * `a*b` * e_u".  When the text has no edges and only the
/// identity, `start` fixes the vertex; otherwise it is inferred and checked.
PathWord parse_path(const GogPtr& gog, std::string_view text, std::optional<int> start = std::nullopt);

}  // namespace freegog
