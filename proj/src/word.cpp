#include "freegog/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace freegog {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front()))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int letter_rank(Letter l) { return 2 * letter_generator(l) + (l < 0 ? 1 : 0); }

void check_same(const Word& lhs, const Word& rhs) {
  if (!same_alphabet(lhs.alphabet(), rhs.alphabet())) {
    throw AlphabetMismatch("words over different alphabets: " + lhs.str() + " and " + rhs.str());
  }
}

// Splits a token `name` / `name^k` into its parts.
std::pair<std::string_view, long> split_token(std::string_view token) {
  const auto caret = token.find('^');
  if (caret == std::string_view::npos) return {trim(token), 1};
  const auto name = trim(token.substr(0, caret));
  const auto exp_text = trim(token.substr(caret + 1));
  long exponent = 0;
  const auto* first = exp_text.data();
  const auto* last = exp_text.data() + exp_text.size();
  if (!exp_text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, exponent);
  if (ec != std::errc() || ptr != last || exp_text.empty()) {
    throw ParseError("bad exponent in token '" + std::string(token) + "'");
  }
  if (exponent == 0) throw ParseError("zero exponent in token '" + std::string(token) + "'");
  return {name, exponent};
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  text = trim(text);
  if (text.empty()) throw ParseError("empty word text (use 1 for the identity)");
  std::size_t start = 0;
  while (true) {
    const auto star = text.find('*', start);
    const auto token = trim(text.substr(start, star == std::string_view::npos ? text.size() - start : star - start));
    if (token.empty()) throw ParseError("empty factor in word '" + std::string(text) + "'");
    tokens.push_back(token);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return tokens;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("alphabet must have rank >= 1");
  for (int i = 0; i < rank(); ++i) {
    if (!valid_name(names_[i])) throw Error("invalid generator name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second) throw Error("duplicate generator name '" + names_[i] + "'");
  }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> names) {
  return std::shared_ptr<const Alphabet>(new Alphabet(std::move(names)));
}

int Alphabet::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

bool same_alphabet(const AlphabetPtr& lhs, const AlphabetPtr& rhs) {
  return lhs == rhs || (lhs && rhs && *lhs == *rhs);
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw Error("word without alphabet");
}

Word::Word(AlphabetPtr alphabet, std::vector<Letter> letters) : Word(std::move(alphabet)) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0 || letter_generator(l) >= alphabet_->rank()) throw Error("letter out of range");
    if (!letters_.empty() && letters_.back() == -l) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::generator(AlphabetPtr alphabet, int index, int sign) {
  return Word(std::move(alphabet), {make_letter(index, sign)});
}

Word Word::parse(AlphabetPtr alphabet, std::string_view text) {
  std::vector<Letter> letters;
  for (auto token : split_tokens(text)) {
    if (token == "1") continue;
    const auto [name, exponent] = split_token(token);
    const int index = alphabet->find(name);
    if (index < 0) throw ParseError("unknown generator '" + std::string(name) + "'");
    const Letter l = make_letter(index, exponent > 0 ? 1 : -1);
    letters.insert(letters.end(), static_cast<std::size_t>(std::labs(exponent)), l);
  }
  return Word(std::move(alphabet), std::move(letters));
}

Word Word::inverse() const {
  Word result(alphabet_);
  result.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) result.letters_.push_back(-*it);
  return result;
}

Word Word::pow(long exponent) const {
  if (exponent == 0 || empty()) return Word(alphabet_);
  const Word base = exponent > 0 ? *this : inverse();
  const auto n = static_cast<std::size_t>(std::labs(exponent));
  // Only the cyclically reduced core repeats without cancellation.
  const auto [core, conj] = cyclic_reduce(base);
  std::vector<Letter> letters;
  letters.reserve(core.size() * n);
  for (std::size_t i = 0; i < n; ++i) letters.insert(letters.end(), core.letters_.begin(), core.letters_.end());
  return conjugate(Word(alphabet_, std::move(letters)), conj);
}

Word Word::subword(std::size_t begin, std::size_t length) const {
  Word result(alphabet_);
  result.letters_.assign(letters_.begin() + static_cast<long>(begin), letters_.begin() + static_cast<long>(begin + length));
  return result;
}

long Word::exponent_sum(int index) const {
  long sum = 0;
  for (Letter l : letters_) {
    if (letter_generator(l) == index) sum += letter_sign(l);
  }
  return sum;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const long run = static_cast<long>(j - i) * letter_sign(letters_[i]);
    if (!out.empty()) out += '*';
    out += alphabet_->name(letter_generator(letters_[i]));
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
  check_same(lhs, rhs);
  const auto& a = lhs.letters_;
  const auto& b = rhs.letters_;
  std::size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() && a[a.size() - 1 - cancel] == -b[cancel]) ++cancel;
  Word result(lhs.alphabet_);
  result.letters_.reserve(a.size() + b.size() - 2 * cancel);
  result.letters_.insert(result.letters_.end(), a.begin(), a.end() - static_cast<long>(cancel));
  result.letters_.insert(result.letters_.end(), b.begin() + static_cast<long>(cancel), b.end());
  return result;
}

bool Word::operator==(const Word& other) const {
  return letters_ == other.letters_ && same_alphabet(alphabet_, other.alphabet_);
}

bool shortlex_less(const Word& lhs, const Word& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  const auto& a = lhs.letters();
  const auto& b = rhs.letters();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_rank(a[i]) < letter_rank(b[i]);
  }
  return false;
}

Word conjugate(const Word& w, const Word& h) { return h.inverse() * w * h; }

CyclicReduction cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t peel = 0;
  while (2 * peel + 1 < l.size() && l[peel] == -l[l.size() - 1 - peel]) ++peel;
  // w = p * core * p^-1 with p the first `peel` letters, so conjugator = p^-1.
  return {w.subword(peel, l.size() - 2 * peel), w.subword(0, peel).inverse()};
}

bool is_cyclically_reduced(const Word& w) { return w.size() < 2 || w.front() != -w.back(); }

PowerDecomposition primitive_root(const Word& w) {
  const auto [core, conj] = cyclic_reduce(w);
  const auto& l = core.letters();
  const std::size_t n = l.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool periodic = true;
    for (std::size_t i = period; i < n && periodic; ++i) periodic = l[i] == l[i - period];
    if (periodic) {
      return {conjugate(core.subword(0, period), conj), static_cast<long>(n / period)};
    }
  }
  return {w, 1};
}

std::optional<PowerDecomposition> is_proper_power(const Word& w) {
  if (w.empty()) throw Error("is_proper_power: empty word");
  auto root = primitive_root(w);
  if (root.exponent < 2) return std::nullopt;
  return root;
}

std::optional<long> power_of(const Word& w, const Word& z) {
  check_same(w, z);
  if (z.empty()) throw Error("power_of: empty base");
  if (w.empty()) return 0L;
  const auto [core, conj] = cyclic_reduce(z);
  // w = z^k  <=>  conj * w * conj^-1 = core^k.
  const Word inner = conj * w * conj.inverse();
  if (inner.size() % core.size() != 0) return std::nullopt;
  const long magnitude = static_cast<long>(inner.size() / core.size());
  for (long k : {magnitude, -magnitude}) {
    if (core.pow(k) == inner) return k;
  }
  return std::nullopt;
}

std::pair<Word, long> coset_minimum(const Word& w, const Word& c, CosetSide side) {
  check_same(w, c);
  if (c.empty()) return {w, 0};
  const auto window = static_cast<long>(2 * w.size() + 2);
  std::pair<Word, long> best{w, 0};
  for (long k = -window; k <= window; ++k) {
    Word candidate = side == CosetSide::kLeft ? w * c.pow(k) : c.pow(k) * w;
    if (shortlex_less(candidate, best.first)) best = {std::move(candidate), k};
  }
  return best;
}

std::optional<Word> are_conjugate(const Word& u, const Word& v) {
  check_same(u, v);
  if (u.empty() || v.empty()) {
    if (u.empty() && v.empty()) return Word(u.alphabet());
    return std::nullopt;
  }
  const auto cu = cyclic_reduce(u);
  const auto cv = cyclic_reduce(v);
  if (cu.core.size() != cv.core.size()) return std::nullopt;
  const auto& U = cu.core.letters();
  const auto& V = cv.core.letters();
  const std::size_t n = U.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = V[i] == U[(i + shift) % n];
    if (!match) continue;
    // V = x^-1 U x with x = U[0..shift).
    const Word x = cu.core.subword(0, shift);
    const Word h = cu.conjugator.inverse() * x * cv.conjugator;
    // Every witness lies in C(u) h = <root(u)> h.
    return coset_minimum(h, primitive_root(u).root, CosetSide::kRight).first;
  }
  return std::nullopt;
}

std::vector<Word> enumerate_words(const AlphabetPtr& alphabet, int max_length) {
  std::vector<Word> out{Word(alphabet)};
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int g = 0; g < alphabet->rank(); ++g) {
        for (int sign : {1, -1}) {
          const Letter l = make_letter(g, sign);
          const auto& base = out[i].letters();
          if (!base.empty() && base.back() == -l) continue;
          std::vector<Letter> letters = base;
          letters.push_back(l);
          out.emplace_back(alphabet, std::move(letters));
        }
      }
    }
    level_begin = level_end;
  }
  std::stable_sort(out.begin(), out.end(), WordShortlexLess{});
  return out;
}

Word parse_word_inferring_alphabet(std::string_view text) {
  std::vector<std::string> names;
  for (auto token : split_tokens(text)) {
    if (token == "1") continue;
    const auto name = std::string(split_token(token).first);
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  }
  if (names.empty()) names.push_back("x");
  return Word::parse(Alphabet::make(std::move(names)), text);
}

}  // namespace freegog
