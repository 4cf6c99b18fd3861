#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace freegog {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An ordered list of distinct generator names: a basis of a free group.
class Alphabet {
 public:
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of `name`, or -1.
  int find(std::string_view name) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

 private:
  explicit Alphabet(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

bool same_alphabet(const AlphabetPtr& lhs, const AlphabetPtr& rhs);

/// A letter is a signed generator index: +(i+1) for x_i, -(i+1) for x_i^-1.
using Letter = int;

inline Letter make_letter(int generator, int sign) { return sign > 0 ? generator + 1 : -(generator + 1); }
inline int letter_generator(Letter l) { return (l > 0 ? l : -l) - 1; }
inline int letter_sign(Letter l) { return l > 0 ? 1 : -1; }

/// Freely reduced word in the free group on an alphabet.  Immutable.
class Word {
 public:
  explicit Word(AlphabetPtr alphabet);
  /// Freely reduces `letters`.
  Word(AlphabetPtr alphabet, std::vector<Letter> letters);

  static Word generator(AlphabetPtr alphabet, int index, int sign = 1);
  static Word parse(AlphabetPtr alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  Word inverse() const;
  Word pow(long exponent) const;
  Word subword(std::size_t begin, std::size_t length) const;

  /// Sum of the exponents of generator `index`.
  long exponent_sum(int index) const;

  std::string str() const;

  friend Word operator*(const Word& lhs, const Word& rhs);
  Word& operator*=(const Word& rhs) { return *this = *this * rhs; }

  bool operator==(const Word& other) const;
  bool operator!=(const Word& other) const { return !(*this == other); }

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

/// Shortlex order: length first, then letters compared by (generator, positive before negative).
bool shortlex_less(const Word& lhs, const Word& rhs);

struct WordShortlexLess {
  bool operator()(const Word& lhs, const Word& rhs) const { return shortlex_less(lhs, rhs); }
};

/// h^-1 w h.
Word conjugate(const Word& w, const Word& h);

struct CyclicReduction {
  Word core;
  Word conjugator;  // w == conjugator^-1 * core * conjugator
};

CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

/// Returns the shortlex-least h with conjugate(u, h) == v, if any.
std::optional<Word> are_conjugate(const Word& u, const Word& v);

struct PowerDecomposition {
  Word root;
  long exponent;
};

/// Maximal-exponent decomposition w = root^exponent with exponent >= 2, if one exists.
std::optional<PowerDecomposition> is_proper_power(const Word& w);

/// The root r of w with w = r^k, k >= 1 maximal.  Generates the centraliser of a nonempty w.
PowerDecomposition primitive_root(const Word& w);

/// The unique k with w == z^k, if any.  Throws on empty z.
std::optional<long> power_of(const Word& w, const Word& z);

enum class CosetSide {
  kLeft,   // the coset w<c>, elements w c^k
  kRight,  // the coset <c>w, elements c^k w
};

/// Shortlex-least element of the coset of w by the cyclic subgroup <c>.
/// Also returns the exponent k realising it.
std::pair<Word, long> coset_minimum(const Word& w, const Word& c, CosetSide side);

/// All reduced words of length <= max_length, in shortlex order.
std::vector<Word> enumerate_words(const AlphabetPtr& alphabet, int max_length);

/// Parses a word whose alphabet is the set of names in order of first appearance.
Word parse_word_inferring_alphabet(std::string_view text);

}  // namespace freegog
