#include "freegog/pi1.hpp"

#include <queue>
#include <sstream>

#include "freegog/free_aut.hpp"

namespace freegog {

Pi1::Pi1(GogPtr gog) : Pi1(gog, gog->base()) {}

Pi1::Pi1(GogPtr gog, int base) : gog_(std::move(gog)), base_(base) {
  gog_->require_free("pi1");
  build_tree();
  build_presentation();
  eliminate();
}

void Pi1::build_tree() {
  const auto& gog = *gog_;
  in_tree_.assign(static_cast<std::size_t>(gog.directed_edge_count()), false);
  std::vector<std::optional<PathWord>> sigma(static_cast<std::size_t>(gog.vertex_count()));
  sigma[base_] = PathWord(gog_, base_);
  std::queue<int> queue;
  queue.push(base_);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int e = 0; e < gog.directed_edge_count(); ++e) {
      if (gog.iota(e) != v || sigma[gog.tau(e)]) continue;
      in_tree_[e] = in_tree_[GraphOfGroups::bar(e)] = true;
      sigma[gog.tau(e)] = *sigma[v] * PathWord::edge(gog_, e);
      queue.push(gog.tau(e));
    }
  }
  for (auto& s : sigma) sigma_.push_back(std::move(*s));
}

void Pi1::build_presentation() {
  const auto& gog = *gog_;
  std::vector<std::string> names;
  for (int u = 0; u < gog.vertex_count(); ++u) {
    vertex_offset_.push_back(static_cast<int>(names.size()));
    for (const auto& name : gog.vertex(u).alphabet->names()) names.push_back(name);
  }
  for (int k = 0; k < gog.geometric_edge_count(); ++k) {
    if (in_tree_[2 * k]) {
      stable_of_geometric_.push_back(-1);
    } else {
      stable_of_geometric_.push_back(static_cast<int>(names.size()));
      names.push_back(gog.edge(2 * k).name);
    }
  }
  presentation_ = Alphabet::make(std::move(names));

  auto lift = [&](int u, const Word& w) {
    std::vector<Letter> letters;
    for (Letter l : w.letters()) letters.push_back(make_letter(vertex_letter(u, letter_generator(l)), letter_sign(l)));
    return Word(presentation_, std::move(letters));
  };
  for (int k = 0; k < gog.geometric_edge_count(); ++k) {
    const int e = 2 * k;
    Word t(presentation_);
    if (stable_of_geometric_[k] >= 0) t = Word::generator(presentation_, stable_of_geometric_[k]);
    const Word tau_side = lift(gog.tau(e), gog.alpha(e));
    const Word iota_side = lift(gog.iota(e), gog.alpha(GraphOfGroups::bar(e)));
    relators_.push_back(t * tau_side * t.inverse() * iota_side.inverse());
  }
}

void Pi1::eliminate() {
  const auto& gog = *gog_;
  const int n = presentation_->rank();
  std::vector<Word> expression;
  for (int i = 0; i < n; ++i) expression.push_back(Word::generator(presentation_, i));
  std::vector<bool> eliminated(static_cast<std::size_t>(n), false);

  struct Pending {
    Word relator;
    std::optional<int> tau_letter;
    std::optional<int> iota_letter;
  };
  std::vector<Pending> pending;
  for (int k = 0; k < gog.geometric_edge_count(); ++k) {
    Pending p{relators_[k], std::nullopt, std::nullopt};
    const Word& tau_side = gog.alpha(2 * k);
    const Word& iota_side = gog.alpha(2 * k + 1);
    if (tau_side.size() == 1) p.tau_letter = vertex_letter(gog.tau(2 * k), letter_generator(tau_side.front()));
    if (iota_side.size() == 1) p.iota_letter = vertex_letter(gog.iota(2 * k), letter_generator(iota_side.front()));
    pending.push_back(std::move(p));
  }

  auto occurrences = [](const Word& w, int generator) {
    int count = 0;
    for (Letter l : w.letters()) count += letter_generator(l) == generator;
    return count;
  };

  while (!pending.empty()) {
    bool progressed = false;
    for (std::size_t r = 0; r < pending.size() && !progressed; ++r) {
      const Word& relator = pending[r].relator;
      std::optional<int> chosen;
      for (const auto& hint : {pending[r].tau_letter, pending[r].iota_letter}) {
        if (!chosen && hint && occurrences(relator, *hint) == 1) chosen = hint;
      }
      for (std::size_t j = 0; j < relator.size() && !chosen; ++j) {
        const int g = letter_generator(relator.letters()[j]);
        if (occurrences(relator, g) == 1) chosen = g;
      }
      if (!chosen) continue;

      const auto& letters = relator.letters();
      std::size_t at = 0;
      while (letter_generator(letters[at]) != *chosen) ++at;
      const Word before(presentation_, {letters.begin(), letters.begin() + static_cast<long>(at)});
      const Word after(presentation_, {letters.begin() + static_cast<long>(at) + 1, letters.end()});
      const Word value = letters[at] > 0 ? before.inverse() * after.inverse() : after * before;

      std::vector<Word> images;
      for (int i = 0; i < n; ++i) images.push_back(i == *chosen ? value : Word::generator(presentation_, i));
      for (auto& w : expression) w = substitute(w, images, presentation_);
      std::vector<Pending> next;
      for (std::size_t s = 0; s < pending.size(); ++s) {
        if (s == r) continue;
        Word w = substitute(pending[s].relator, images, presentation_);
        if (!w.empty()) next.push_back({std::move(w), pending[s].tau_letter, pending[s].iota_letter});
      }
      pending = std::move(next);
      eliminated[*chosen] = true;
      progressed = true;
    }
    if (!progressed) return;
  }

  free_ = true;
  std::vector<std::string> names;
  std::vector<int> to_basis(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    if (eliminated[i]) continue;
    to_basis[i] = static_cast<int>(names.size());
    basis_generators_.push_back(i);
    names.push_back(presentation_->name(i));
  }
  basis_ = Alphabet::make(std::move(names));
  for (const auto& w : expression) {
    std::vector<Letter> letters;
    for (Letter l : w.letters()) letters.push_back(make_letter(to_basis[letter_generator(l)], letter_sign(l)));
    in_basis_.emplace_back(basis_, std::move(letters));
  }
}

std::optional<Letter> Pi1::stable_letter(int e) const {
  const int s = stable_of_geometric_.at(e / 2);
  if (s < 0) return std::nullopt;
  return make_letter(s, e % 2 == 0 ? 1 : -1);
}

PathWord Pi1::presentation_loop(int i) const {
  const auto& gog = *gog_;
  for (int u = gog.vertex_count() - 1; u >= 0; --u) {
    if (i >= vertex_offset_[u] && i < vertex_offset_[u] + gog.vertex(u).alphabet->rank()) {
      return sigma_[u] * PathWord::vertex_element(gog_, u, Word::generator(gog.vertex(u).alphabet, i - vertex_offset_[u])) *
             sigma_[u].inverse();
    }
  }
  for (int k = 0; k < gog.geometric_edge_count(); ++k) {
    if (stable_of_geometric_[k] == i) {
      const int e = 2 * k;
      return sigma_[gog.iota(e)] * PathWord::edge(gog_, e) * sigma_[gog.tau(e)].inverse();
    }
  }
  throw Error("presentation_loop: no generator " + std::to_string(i));
}

const AlphabetPtr& Pi1::basis() const {
  if (!free_) throw Error("pi1: presentation not recognised as free by elimination");
  return basis_;
}

PathWord Pi1::basis_loop(int i) const {
  basis();
  return presentation_loop(basis_generators_.at(i));
}

Word Pi1::to_presentation(const PathWord& loop) const {
  if (loop.gog() != gog_ || !loop.is_loop() || loop.start() != base_) throw Error("pi1: not a loop at the base");
  std::vector<Letter> letters;
  auto vertex_word = [&](int u, const Word& w) {
    for (Letter l : w.letters()) letters.push_back(make_letter(vertex_letter(u, letter_generator(l)), letter_sign(l)));
  };
  vertex_word(loop.start(), loop.elements().front());
  for (std::size_t i = 0; i < loop.edges().size(); ++i) {
    const int e = loop.edges()[i];
    if (const auto t = stable_letter(e)) letters.push_back(*t);
    vertex_word(gog_->tau(e), loop.elements()[i + 1]);
  }
  return Word(presentation_, std::move(letters));
}

Word Pi1::presentation_to_basis(const Word& w) const {
  return substitute(w, in_basis_, basis());
}

Word Pi1::to_basis(const PathWord& loop) const { return presentation_to_basis(to_presentation(loop)); }

AbelianTarget::Value AbelianTarget::multiply(const Value& x, const Value& y) const {
  Value out(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += y[i];
  return out;
}

AbelianTarget::Value AbelianTarget::inverse(const Value& x) const {
  Value out(x);
  for (auto& v : out) v = -v;
  return out;
}

std::string AbelianTarget::str(const Value& x) const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < x.size(); ++i) out << (i ? "," : "") << x[i];
  out << ')';
  return out.str();
}

}  // namespace freegog
