#include "freegog/free_aut.hpp"

#include <cctype>
#include <sstream>

namespace freegog {

namespace {

void check_images(const AlphabetPtr& source, const AlphabetPtr& target, const std::vector<Word>& images) {
  if (static_cast<int>(images.size()) != source->rank()) throw Error("wrong number of generator images");
  for (const auto& w : images) {
    if (!same_alphabet(w.alphabet(), target)) throw AlphabetMismatch("generator image over the wrong alphabet");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct AutLines {
  std::vector<std::pair<std::string, std::string>> forward;
  std::vector<std::pair<std::string, std::string>> backward;
};

AutLines split_aut_text(std::string_view text) {
  AutLines out;
  bool in_inverse = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    if (line == "inverse:") {
      if (in_inverse) throw ParseError("line " + std::to_string(line_no) + ": repeated inverse block");
      in_inverse = true;
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'x -> word'");
    }
    auto& target = in_inverse ? out.backward : out.forward;
    target.emplace_back(std::string(trim(line.substr(0, arrow))), std::string(trim(line.substr(arrow + 2))));
  }
  return out;
}

std::vector<Word> images_from(const AlphabetPtr& alphabet,
                              const std::vector<std::pair<std::string, std::string>>& lines) {
  std::vector<Word> images;
  for (int i = 0; i < alphabet->rank(); ++i) images.push_back(Word::generator(alphabet, i));
  std::vector<bool> seen(static_cast<std::size_t>(alphabet->rank()), false);
  for (const auto& [lhs, rhs] : lines) {
    const int index = alphabet->find(lhs);
    if (index < 0) throw ParseError("unknown generator '" + lhs + "'");
    if (seen[index]) throw ParseError("generator '" + lhs + "' given twice");
    seen[index] = true;
    images[index] = Word::parse(alphabet, rhs);
  }
  return images;
}

}  // namespace

Word substitute(const Word& w, const std::vector<Word>& images, const AlphabetPtr& target) {
  Word out(target);
  for (Letter l : w.letters()) {
    const Word& image = images.at(letter_generator(l));
    out *= l > 0 ? image : image.inverse();
  }
  return out;
}

FreeAut::FreeAut(AlphabetPtr source, AlphabetPtr target, std::vector<Word> forward, std::vector<Word> backward)
    : source_(std::move(source)), target_(std::move(target)), forward_(std::move(forward)), backward_(std::move(backward)) {
  if (source_->rank() != target_->rank()) throw Error("isomorphism between free groups of different rank");
  check_images(source_, target_, forward_);
  check_images(target_, source_, backward_);
  for (int i = 0; i < source_->rank(); ++i) {
    if (apply_inverse(forward_[i]) != Word::generator(source_, i) ||
        apply(backward_[i]) != Word::generator(target_, i)) {
      throw Error("inverse witness does not invert the map at generator " + source_->name(i));
    }
  }
}

FreeAut FreeAut::identity(AlphabetPtr alphabet) {
  std::vector<Word> images;
  for (int i = 0; i < alphabet->rank(); ++i) images.push_back(Word::generator(alphabet, i));
  return FreeAut(alphabet, images, images);
}

FreeAut FreeAut::inner(const Word& h) {
  const auto& alphabet = h.alphabet();
  std::vector<Word> forward, backward;
  for (int i = 0; i < alphabet->rank(); ++i) {
    const Word x = Word::generator(alphabet, i);
    forward.push_back(conjugate(x, h));
    backward.push_back(conjugate(x, h.inverse()));
  }
  return FreeAut(alphabet, std::move(forward), std::move(backward));
}

FreeAut FreeAut::relabel(AlphabetPtr source, AlphabetPtr target, const std::vector<int>& images,
                         const std::vector<int>& signs) {
  const int n = source->rank();
  if (static_cast<int>(images.size()) != n || static_cast<int>(signs.size()) != n) throw Error("relabel: wrong size");
  std::vector<Word> forward(static_cast<std::size_t>(n), Word(target));
  std::vector<Word> backward(static_cast<std::size_t>(n), Word(source));
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (images[i] < 0 || images[i] >= n || hit[images[i]]) throw Error("relabel: not a permutation");
    hit[images[i]] = true;
    forward[i] = Word::generator(target, images[i], signs[i]);
    backward[images[i]] = Word::generator(source, i, signs[i]);
  }
  return FreeAut(std::move(source), std::move(target), std::move(forward), std::move(backward));
}

Word FreeAut::apply(const Word& w) const {
  if (!same_alphabet(w.alphabet(), source_)) throw AlphabetMismatch("apply: word not in the source alphabet");
  return substitute(w, forward_, target_);
}

Word FreeAut::apply_inverse(const Word& w) const {
  if (!same_alphabet(w.alphabet(), target_)) throw AlphabetMismatch("apply_inverse: word not in the target alphabet");
  return substitute(w, backward_, source_);
}

FreeAut FreeAut::inverse() const { return FreeAut(target_, source_, backward_, forward_); }

bool FreeAut::operator==(const FreeAut& other) const {
  return same_alphabet(source_, other.source_) && same_alphabet(target_, other.target_) && forward_ == other.forward_;
}

FreeAut compose(const FreeAut& f, const FreeAut& g) {
  if (!same_alphabet(f.target(), g.source())) throw AlphabetMismatch("compose: target of f is not the source of g");
  std::vector<Word> forward, backward;
  for (const auto& w : f.images()) forward.push_back(g.apply(w));
  for (const auto& w : g.inverse_images()) backward.push_back(f.apply_inverse(w));
  return FreeAut(f.source(), g.target(), std::move(forward), std::move(backward));
}

FreeAut power(const FreeAut& f, long exponent) {
  if (!f.is_endo()) throw AlphabetMismatch("power of a non-endomorphism");
  FreeAut base = exponent >= 0 ? f : f.inverse();
  FreeAut out = FreeAut::identity(f.source());
  for (long i = 0; i < (exponent >= 0 ? exponent : -exponent); ++i) out = compose(out, base);
  return out;
}

std::optional<Word> inner_witness(const AlphabetPtr& alphabet, const std::vector<Word>& images) {
  if (alphabet->rank() < 2) throw Error("innerness is undecidable by witness in rank 1 (nontrivial centre)");
  check_images(alphabet, alphabet, images);
  const Word x1 = Word::generator(alphabet, 0);
  const Word x2 = Word::generator(alphabet, 1);
  // Particular solution of g^-1 x1 g = (x1)f; every solution is x1^k g0.
  const auto g0 = are_conjugate(x1, images[0]);
  if (!g0) return std::nullopt;
  // Second generator: x1^-k x2 x1^k == g0 (x2)f g0^-1, a word of length 2|k|+1.
  const Word target = *g0 * images[1] * g0->inverse();
  const long window = static_cast<long>(target.size()) + 1;
  for (long k = -window; k <= window; ++k) {
    const Word g = x1.pow(k) * *g0;
    bool ok = true;
    for (int i = 0; i < alphabet->rank() && ok; ++i) {
      ok = conjugate(Word::generator(alphabet, i), g) == images[i];
    }
    if (ok) return g;
  }
  return std::nullopt;
}

std::optional<Word> is_inner(const FreeAut& f) {
  if (!f.is_endo()) throw AlphabetMismatch("is_inner: not an automorphism");
  return inner_witness(f.source(), f.images());
}

bool outer_equal(const FreeAut& f, const FreeAut& g) { return is_inner(compose(f, g.inverse())).has_value(); }

bool outer_commutes(const FreeAut& f, const FreeAut& g) { return outer_equal(compose(f, g), compose(g, f)); }

FreeAut conjugate_aut(const FreeAut& f, const FreeAut& by) { return compose(by.inverse(), compose(f, by)); }

McCoolResult mccool_membership(const FreeAut& f, const std::vector<Word>& family,
                               const std::optional<FreeAut>& equivariant_wrt) {
  if (!f.is_endo()) throw AlphabetMismatch("mccool_membership: not an automorphism");
  if (f.source()->rank() < 2) throw Error("mccool_membership: rank must be >= 2");
  McCoolResult result;
  result.member = true;
  for (const auto& w : family) {
    if (w.empty()) throw Error("mccool_membership: empty family word");
    if (is_proper_power(w)) {
      throw Error("mccool_membership: family word " + w.str() + " is a proper power (not maximal cyclic)");
    }
    auto h = are_conjugate(w, f.apply(w));
    result.member = result.member && h.has_value();
    result.witnesses.push_back(std::move(h));
  }
  if (equivariant_wrt) {
    result.commutes = outer_commutes(f, *equivariant_wrt);
    result.member = result.member && *result.commutes;
  }
  return result;
}

std::string format_aut(const FreeAut& f) {
  std::ostringstream out;
  for (int i = 0; i < f.source()->rank(); ++i) out << f.source()->name(i) << " -> " << f.image(i).str() << '\n';
  out << "inverse:\n";
  for (int i = 0; i < f.target()->rank(); ++i) {
    out << f.target()->name(i) << " -> " << f.inverse_image(i).str() << '\n';
  }
  return out.str();
}

FreeAut parse_aut(const AlphabetPtr& alphabet, std::string_view text) {
  const auto lines = split_aut_text(text);
  auto forward = images_from(alphabet, lines.forward);
  if (lines.backward.empty()) {
    // Without an inverse block only signed letter permutations are accepted.
    std::vector<int> targets, signs;
    for (const auto& w : forward) {
      if (w.size() != 1) throw ParseError("missing 'inverse:' block for a non-permutation automorphism");
      targets.push_back(letter_generator(w.front()));
      signs.push_back(letter_sign(w.front()));
    }
    return FreeAut::relabel(alphabet, alphabet, targets, signs);
  }
  auto backward = images_from(alphabet, lines.backward);
  return FreeAut(alphabet, std::move(forward), std::move(backward));
}

FreeAut parse_aut(std::string_view text) {
  const auto lines = split_aut_text(text);
  std::vector<std::string> names;
  for (const auto& line : lines.forward) names.push_back(line.first);
  return parse_aut(Alphabet::make(std::move(names)), text);
}

}  // namespace freegog
