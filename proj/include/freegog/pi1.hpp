#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freegog/gog.hpp"

namespace freegog {

/// pi_1(G, base) with a breadth-first maximal tree S (edges taken in
/// declaration order), its standard presentation, and a free basis found by
/// Tietze elimination.
///
/// Presentation generators: every vertex generator x (standing for the loop
/// sigma_u x sigma_u^-1), then one stable letter t_e per geometric edge not in
/// S, named after the edge.  One relator per geometric edge e:
///   t_e [alpha_e(z)] t_e^-1 [alpha_ebar(z)]^-1     (t_e = 1 for tree edges).
class Pi1 {
 public:
  explicit Pi1(GogPtr gog);
  Pi1(GogPtr gog, int base);

  const GogPtr& gog() const { return gog_; }
  int base() const { return base_; }

  bool in_tree(int e) const { return in_tree_.at(e); }
  /// sigma_u: the reduced path in S from the base to u.
  const PathWord& sigma(int u) const { return sigma_.at(u); }

  const AlphabetPtr& presentation_alphabet() const { return presentation_; }
  const std::vector<Word>& relators() const { return relators_; }
  /// Presentation letter of vertex generator i of u.
  int vertex_letter(int u, int i) const { return vertex_offset_.at(u) + i; }
  /// Presentation letter of the stable letter of directed edge e (sign by
  /// orientation), or nullopt for tree edges.
  std::optional<Letter> stable_letter(int e) const;
  /// Vertex generator or stable letter behind presentation generator i, as a
  /// standard generating loop.
  PathWord presentation_loop(int i) const;

  /// False when elimination stalled; the basis functions then throw.
  bool recognised_free() const { return free_; }
  const AlphabetPtr& basis() const;
  /// Presentation generator i expressed in the basis.
  const Word& presentation_in_basis(int i) const { return in_basis_.at(i); }
  /// Loop at the base representing basis generator i.
  PathWord basis_loop(int i) const;

  /// Image of a loop at the base in the free group on the presentation
  /// generators, well defined modulo the relators.
  Word to_presentation(const PathWord& loop) const;
  Word to_basis(const PathWord& loop) const;
  Word presentation_to_basis(const Word& w) const;

 private:
  void build_tree();
  void build_presentation();
  void eliminate();

  GogPtr gog_;
  int base_;
  std::vector<bool> in_tree_;
  std::vector<PathWord> sigma_;
  std::vector<int> vertex_offset_;
  std::vector<int> stable_of_geometric_;  // -1 for tree edges
  AlphabetPtr presentation_;
  std::vector<Word> relators_;
  bool free_ = false;
  AlphabetPtr basis_;
  std::vector<int> basis_generators_;  // presentation index of each basis letter
  std::vector<Word> in_basis_;
};

/// Q = Z^k.
struct AbelianTarget {
  using Value = std::vector<long long>;
  int dimension = 1;
  Value identity() const { return Value(static_cast<std::size_t>(dimension), 0); }
  Value multiply(const Value& x, const Value& y) const;
  Value inverse(const Value& x) const;
  bool equal(const Value& x, const Value& y) const { return x == y; }
  std::string str(const Value& x) const;
};

/// Q a free group.
struct FreeTarget {
  using Value = Word;
  AlphabetPtr alphabet;
  Value identity() const { return Word(alphabet); }
  Value multiply(const Value& x, const Value& y) const { return x * y; }
  Value inverse(const Value& x) const { return x.inverse(); }
  bool equal(const Value& x, const Value& y) const { return x == y; }
  std::string str(const Value& x) const { return x.str(); }
};

/// rho-hat on the generators of the path group:
///   rho-hat(e) = 1 for e in S,
///   rho-hat(e) = rho(sigma_iota(e) e sigma_tau(e)^-1) otherwise,
///   rho-hat(x) = rho(sigma_u x sigma_u^-1) for x in G_u.
template <typename Target>
class ExtendedHom {
 public:
  using Value = typename Target::Value;

  const Target& target() const { return target_; }
  const Value& vertex_generator(int u, int i) const { return vertex_values_.at(u).at(i); }
  const Value& edge(int e) const { return edge_values_.at(e); }

  Value evaluate(int u, const Word& w) const {
    Value out = target_.identity();
    for (Letter l : w.letters()) {
      const Value& x = vertex_values_.at(u).at(letter_generator(l));
      out = target_.multiply(out, l > 0 ? x : target_.inverse(x));
    }
    return out;
  }

  Value evaluate(const PathWord& p) const {
    Value out = evaluate(p.start(), p.elements().front());
    for (std::size_t i = 0; i < p.edges().size(); ++i) {
      out = target_.multiply(out, edge_values_.at(p.edges()[i]));
      out = target_.multiply(out, evaluate(p.gog()->tau(p.edges()[i]), p.elements()[i + 1]));
    }
    return out;
  }

  /// Descriptions of edge relations not sent to the identity.
  std::vector<std::string> relation_failures() const {
    std::vector<std::string> failures;
    const auto& gog = *pi1_->gog();
    for (int e = 0; e < gog.directed_edge_count(); ++e) {
      const Value lhs = target_.multiply(
          target_.multiply(edge_values_[e], evaluate(gog.tau(e), gog.alpha(e))), edge_values_[GraphOfGroups::bar(e)]);
      const Value rhs = evaluate(gog.iota(e), gog.alpha(GraphOfGroups::bar(e)));
      if (!target_.equal(lhs, rhs)) {
        failures.push_back("edge " + gog.edge(e).name + ": " + target_.str(lhs) + " != " + target_.str(rhs));
      }
    }
    return failures;
  }

 private:
  template <typename T>
  friend ExtendedHom<T> extend_homomorphism(const Pi1& pi1, const T& target,
                                            const std::vector<typename T::Value>& rho);

  const Pi1* pi1_ = nullptr;
  Target target_;
  std::vector<std::vector<Value>> vertex_values_;
  std::vector<Value> edge_values_;
};

/// rho is given on the presentation generators of pi1 (vertex generators in
/// tree-conjugated form, then stable letters).  Throws if rho does not kill
/// every relator.
template <typename Target>
ExtendedHom<Target> extend_homomorphism(const Pi1& pi1, const Target& target,
                                        const std::vector<typename Target::Value>& rho) {
  const auto& gog = *pi1.gog();
  const auto& presentation = pi1.presentation_alphabet();
  if (static_cast<int>(rho.size()) != presentation->rank()) throw Error("extend_homomorphism: wrong number of values");
  ExtendedHom<Target> hom;
  hom.pi1_ = &pi1;
  hom.target_ = target;
  for (int u = 0; u < gog.vertex_count(); ++u) {
    std::vector<typename Target::Value> values;
    for (int i = 0; i < gog.vertex(u).alphabet->rank(); ++i) values.push_back(rho[pi1.vertex_letter(u, i)]);
    hom.vertex_values_.push_back(std::move(values));
  }
  for (int e = 0; e < gog.directed_edge_count(); ++e) {
    const auto t = pi1.stable_letter(e);
    if (!t) {
      hom.edge_values_.push_back(target.identity());
    } else {
      const auto& x = rho[letter_generator(*t)];
      hom.edge_values_.push_back(*t > 0 ? x : target.inverse(x));
    }
  }
  for (const auto& relator : pi1.relators()) {
    auto value = target.identity();
    for (Letter l : relator.letters()) {
      const auto& x = rho[letter_generator(l)];
      value = target.multiply(value, l > 0 ? x : target.inverse(x));
    }
    if (!target.equal(value, target.identity())) {
      throw Error("extend_homomorphism: rho is not a homomorphism (relator " + relator.str() + " maps to " +
                  target.str(value) + ")");
    }
  }
  return hom;
}

/// Values on the presentation generators from values on the free basis.
template <typename Target>
std::vector<typename Target::Value> rho_from_basis(const Pi1& pi1, const Target& target,
                                                   const std::vector<typename Target::Value>& on_basis) {
  if (static_cast<int>(on_basis.size()) != pi1.basis()->rank()) throw Error("rho_from_basis: wrong number of values");
  std::vector<typename Target::Value> rho;
  for (int i = 0; i < pi1.presentation_alphabet()->rank(); ++i) {
    auto value = target.identity();
    for (Letter l : pi1.presentation_in_basis(i).letters()) {
      const auto& x = on_basis[letter_generator(l)];
      value = target.multiply(value, l > 0 ? x : target.inverse(x));
    }
    rho.push_back(std::move(value));
  }
  return rho;
}

}  // namespace freegog
