#include "freegog/folding.hpp"

#include <algorithm>
#include <map>

namespace freegog {

FoldedSubgroup::FoldedSubgroup(std::vector<Word> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw Error("subgroup membership needs at least one generator");
  ambient_ = generators_.front().alphabet();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!same_alphabet(generators_[i].alphabet(), ambient_)) {
      throw AlphabetMismatch("subgroup generators over different alphabets");
    }
    names.push_back("x" + std::to_string(i + 1));
  }
  generator_alphabet_ = Alphabet::make(std::move(names));

  const int base = add_vertex();
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& letters = generators_[i].letters();
    int current = base;
    for (std::size_t j = 0; j < letters.size(); ++j) {
      const bool last = j + 1 == letters.size();
      const int next = last ? base : add_vertex();
      Word label = last ? Word::generator(generator_alphabet_, static_cast<int>(i)) : Word(generator_alphabet_);
      add_edge(current, next, letters[j], std::move(label));
      current = next;
    }
  }
  fold();
  build_adjacency();
}

int FoldedSubgroup::add_vertex() {
  ++live_vertices_;
  return vertex_slots_++;
}

void FoldedSubgroup::add_edge(int from, int to, Letter letter, Word label) {
  // Stored edges always read a positive letter from tail to head.
  if (letter > 0) {
    edges_.push_back({from, to, letter_generator(letter), std::move(label)});
  } else {
    edges_.push_back({to, from, letter_generator(letter), label.inverse()});
  }
}

int FoldedSubgroup::edge_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.alive; }));
}

void FoldedSubgroup::fold() {
  struct Traversal {
    int edge;
    int other;
    Word label;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, Letter>, Traversal> seen;
    for (int id = 0; id < static_cast<int>(edges_.size()) && !changed; ++id) {
      const Edge& e = edges_[id];
      if (!e.alive) continue;
      const Traversal outs[2] = {{id, e.head, e.label}, {id, e.tail, e.label.inverse()}};
      const std::pair<int, Letter> keys[2] = {{e.tail, make_letter(e.generator, 1)},
                                              {e.head, make_letter(e.generator, -1)}};
      for (int side = 0; side < 2 && !changed; ++side) {
        auto [it, inserted] = seen.emplace(keys[side], outs[side]);
        if (inserted) continue;
        Traversal first = it->second;
        Traversal second = outs[side];
        changed = true;
        if (first.other == second.other) {
          edges_[second.edge].alive = false;
          break;
        }
        // The vertex reached by `second` is merged away; the basepoint survives.
        if (second.other == 0) std::swap(first, second);
        const int keep = first.other;
        const int gone = second.other;
        edges_[second.edge].alive = false;
        const Word shift = first.label.inverse() * second.label;
        for (Edge& f : edges_) {
          if (!f.alive) continue;
          if (f.tail == gone) {
            f.label = shift * f.label;
            f.tail = keep;
          }
          if (f.head == gone) {
            f.label = f.label * shift.inverse();
            f.head = keep;
          }
        }
        --live_vertices_;
      }
    }
  }
}

void FoldedSubgroup::build_adjacency() {
  adjacency_.assign(static_cast<std::size_t>(vertex_slots_), {});
  for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
    const Edge& e = edges_[id];
    if (!e.alive) continue;
    adjacency_[e.tail].push_back({make_letter(e.generator, 1), id, true});
    adjacency_[e.head].push_back({make_letter(e.generator, -1), id, false});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(), [](const HalfEdge& a, const HalfEdge& b) { return a.letter < b.letter; });
  }
}

MembershipResult FoldedSubgroup::contains(const Word& w) const {
  if (!same_alphabet(w.alphabet(), ambient_)) throw AlphabetMismatch("membership test across alphabets");
  int vertex = 0;
  Word witness(generator_alphabet_);
  for (Letter l : w.letters()) {
    const auto& list = adjacency_[vertex];
    const auto it = std::find_if(list.begin(), list.end(), [l](const HalfEdge& h) { return h.letter == l; });
    if (it == list.end()) return {};
    const Edge& e = edges_[it->edge];
    witness *= it->forward ? e.label : e.label.inverse();
    vertex = it->forward ? e.head : e.tail;
  }
  if (vertex != 0) return {};
  return {true, std::move(witness)};
}

Word FoldedSubgroup::evaluate(const Word& expression) const {
  Word out(ambient_);
  for (Letter l : expression.letters()) {
    const Word& g = generators_.at(letter_generator(l));
    out *= l > 0 ? g : g.inverse();
  }
  return out;
}

MembershipResult subgroup_membership(const std::vector<Word>& generators, const Word& w) {
  return FoldedSubgroup(generators).contains(w);
}

}  // namespace freegog
