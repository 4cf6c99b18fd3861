#pragma once

#include <optional>
#include <vector>

#include "freegog/word.hpp"

namespace freegog {

struct MembershipResult {
  bool member = false;
  /// Word in the abstract subgroup generators x1..xk; evaluates to the tested word.
  std::optional<Word> witness;
};

/// Folded core graph of a finitely generated subgroup.  Each edge carries a
/// label in the free group on the subgroup generators, so that any closed
/// path at the basepoint spells an element together with an expression of it
/// in the generators.
class FoldedSubgroup {
 public:
  explicit FoldedSubgroup(std::vector<Word> generators);

  const AlphabetPtr& ambient() const { return ambient_; }
  /// Alphabet x1..xk of abstract subgroup generators.
  const AlphabetPtr& generator_alphabet() const { return generator_alphabet_; }
  const std::vector<Word>& generators() const { return generators_; }

  int vertex_count() const { return live_vertices_; }
  int edge_count() const;

  MembershipResult contains(const Word& w) const;

  /// Substitutes the generators into a word over generator_alphabet().
  Word evaluate(const Word& expression) const;

 private:
  struct Edge {
    int tail;
    int head;
    int generator;  // ambient generator index, read tail -> head
    Word label;
    bool alive = true;
  };

  struct HalfEdge {
    Letter letter;
    int edge;
    bool forward;
  };

  int add_vertex();
  void add_edge(int from, int to, Letter letter, Word label);
  void fold();
  void build_adjacency();

  AlphabetPtr ambient_;
  AlphabetPtr generator_alphabet_;
  std::vector<Word> generators_;
  std::vector<Edge> edges_;
  int vertex_slots_ = 0;
  int live_vertices_ = 0;
  // Per vertex, half-edges sorted by letter; deterministic after folding.
  std::vector<std::vector<HalfEdge>> adjacency_;
};

MembershipResult subgroup_membership(const std::vector<Word>& generators, const Word& w);

}  // namespace freegog
