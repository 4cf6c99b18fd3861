#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freegog/word.hpp"

namespace freegog {

/// Isomorphism between free groups, given by generator images and an inverse
/// witness.  When source and target alphabets coincide it is an automorphism;
/// vertex-group isomorphisms of a graph of groups use distinct alphabets.
///
/// Words act on the right: apply(w) is (w)f, and compose(f, g) is "f then g".
class FreeAut {
 public:
  /// Throws unless forward and backward are mutually inverse on every generator.
  FreeAut(AlphabetPtr source, AlphabetPtr target, std::vector<Word> forward, std::vector<Word> backward);
  FreeAut(AlphabetPtr alphabet, std::vector<Word> forward, std::vector<Word> backward)
      : FreeAut(alphabet, alphabet, std::move(forward), std::move(backward)) {}

  static FreeAut identity(AlphabetPtr alphabet);
  /// Ad(h): x -> h^-1 x h.
  static FreeAut inner(const Word& h);
  /// Maps generator i of `source` to generator images[i] of `target` raised to
  /// signs[i]; the inverse is derived.
  static FreeAut relabel(AlphabetPtr source, AlphabetPtr target, const std::vector<int>& images,
                         const std::vector<int>& signs);

  const AlphabetPtr& source() const { return source_; }
  const AlphabetPtr& target() const { return target_; }
  bool is_endo() const { return same_alphabet(source_, target_); }

  const Word& image(int generator) const { return forward_.at(generator); }
  const Word& inverse_image(int generator) const { return backward_.at(generator); }
  const std::vector<Word>& images() const { return forward_; }
  const std::vector<Word>& inverse_images() const { return backward_; }

  Word apply(const Word& w) const;
  Word apply_inverse(const Word& w) const;
  FreeAut inverse() const;

  bool operator==(const FreeAut& other) const;
  bool operator!=(const FreeAut& other) const { return !(*this == other); }

 private:
  AlphabetPtr source_;
  AlphabetPtr target_;
  std::vector<Word> forward_;
  std::vector<Word> backward_;
};

/// Substitutes images[i] for generator i of w's alphabet.
Word substitute(const Word& w, const std::vector<Word>& images, const AlphabetPtr& target);

/// (w)compose(f, g) == ((w)f)g.
FreeAut compose(const FreeAut& f, const FreeAut& g);
FreeAut power(const FreeAut& f, long exponent);

/// h with x -> h^-1 x h for every generator, for an endomorphism given by its
/// generator images.  Rank must be >= 2.
std::optional<Word> inner_witness(const AlphabetPtr& alphabet, const std::vector<Word>& images);
std::optional<Word> is_inner(const FreeAut& f);

bool outer_equal(const FreeAut& f, const FreeAut& g);
bool outer_commutes(const FreeAut& f, const FreeAut& g);

/// compose(inverse(by), compose(f, by)).
FreeAut conjugate_aut(const FreeAut& f, const FreeAut& by);

/// Outer automorphism class; equality is decided by is_inner of the difference.
class OuterAutClass {
 public:
  explicit OuterAutClass(FreeAut representative) : rep_(std::move(representative)) {}
  const FreeAut& representative() const { return rep_; }
  bool is_trivial() const { return is_inner(rep_).has_value(); }
  bool operator==(const OuterAutClass& other) const { return outer_equal(rep_, other.rep_); }

 private:
  FreeAut rep_;
};

struct McCoolResult {
  bool member = false;
  /// Per family word w_i: h_i with (w_i)f == h_i^-1 w_i h_i, when one exists.
  std::vector<std::optional<Word>> witnesses;
  /// Set when an equivariance automorphism was supplied.
  std::optional<bool> commutes;
};

/// Membership of [f] in the McCool group of the cyclic family <w_i>, optionally
/// intersected with the centraliser of [equivariant_wrt].  Family words must be
/// nonempty and not proper powers.
McCoolResult mccool_membership(const FreeAut& f, const std::vector<Word>& family,
                               const std::optional<FreeAut>& equivariant_wrt = std::nullopt);

/// Text form: one `x -> word` line per generator, then `inverse:` and the
/// inverse images.
std::string format_aut(const FreeAut& f);
FreeAut parse_aut(const AlphabetPtr& alphabet, std::string_view text);
/// Alphabet taken from the left-hand sides of the forward block, in order.
FreeAut parse_aut(std::string_view text);

}  // namespace freegog
