#include <doctest.h>

#include "fixtures.hpp"
#include "freegog/folding.hpp"
#include "freegog/random.hpp"

using namespace freegog;
using fixtures::w2;
using fixtures::w4;

namespace {

// Concatenate, then cancel adjacent inverse pairs until none remain.
std::vector<Letter> naive_reduce(std::vector<Letter> v) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == -v[i + 1]) {
        v.erase(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return v;
}

// Least length over the conjugacy class, by peeling and rotating.
std::size_t min_class_length(const Word& w) {
  std::size_t best = w.size();
  Word x = w;
  for (std::size_t r = 0; r < w.size() + 1; ++r) {
    best = std::min(best, x.size());
    if (x.empty()) break;
    const auto first = Word::generator(x.alphabet(), letter_generator(x.front()), letter_sign(x.front()));
    x = first.inverse() * x * first;
  }
  return best;
}

}  // namespace

TEST_CASE("multiply") {
  CHECK((w2("a") * w2("a^-1")).empty());
  CHECK(w2("a*b") * w2("b^-1*a") == w2("a^2"));
  CHECK(w4("a*b") * w4("alpha*beta") == w4("a*b*alpha*beta"));
  Sampler rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto u = rng.word_upto(fixtures::rank4(), 8);
    const auto v = rng.word_upto(fixtures::rank4(), 8);
    auto cat = u.letters();
    cat.insert(cat.end(), v.letters().begin(), v.letters().end());
    CHECK((u * v).letters() == naive_reduce(cat));
  }
}

TEST_CASE("parse and print") {
  CHECK(w2("a*a*b^-1").str() == "a^2*b^-1");
  CHECK(w2("1").empty());
  CHECK_THROWS_AS(w2(""), ParseError);
  CHECK(w2("1").str() == "1");
  CHECK_THROWS_AS(w2("c"), ParseError);
  CHECK_THROWS_AS(Word::parse(fixtures::ab(), "a^"), ParseError);
  CHECK(parse_word_inferring_alphabet("x*y*x^-1").alphabet()->names() == std::vector<std::string>{"x", "y"});
  CHECK_THROWS_AS(w2("a") * w4("a"), AlphabetMismatch);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(w2("a"), w2("1")) == w2("a"));
  CHECK(conjugate(w2("a"), w2("a*b")) == w2("b^-1*a*b"));
  CHECK(conjugate(w4("alpha"), w4("alpha*beta")) == w4("beta^-1*alpha*beta"));
}

TEST_CASE("cyclic_reduce") {
  const auto e = cyclic_reduce(w2("1"));
  CHECK(e.core.empty());
  CHECK(e.conjugator.empty());
  const auto one = cyclic_reduce(w2("b*a*b^-1"));
  CHECK(one.core == w2("a"));
  CHECK(one.conjugator == w2("b^-1"));
  const auto two = cyclic_reduce(w2("b^-1*a^-1*b*a*b"));
  CHECK(two.core == w2("b"));
  CHECK(two.conjugator == w2("a*b"));
  Sampler rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto w = rng.word_upto(fixtures::ab(), 9);
    const auto c = cyclic_reduce(w);
    CHECK(conjugate(c.core, c.conjugator) == w);
    CHECK(is_cyclically_reduced(c.core));
    CHECK(c.core.size() == min_class_length(w));
  }
}

TEST_CASE("are_conjugate") {
  CHECK(are_conjugate(w2("a"), w2("b^-1*a*b")) == w2("b"));
  CHECK_FALSE(are_conjugate(w2("a"), w2("a^-1")));
  CHECK(are_conjugate(w2("a*b"), w2("b*a")) == w2("a"));
  Sampler rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto u = rng.word_upto(fixtures::ab(), 6);
    const auto h = rng.word_upto(fixtures::ab(), 5);
    const auto v = conjugate(u, h);
    const auto found = are_conjugate(u, v);
    REQUIRE(found);
    CHECK(conjugate(u, *found) == v);
    // The returned witness is shortlex-least, so never longer than h.
    CHECK(found->size() <= h.size());
  }
}

TEST_CASE("proper powers and roots") {
  const auto p = is_proper_power(w2("a*b*a*b"));
  REQUIRE(p);
  CHECK(p->root == w2("a*b"));
  CHECK(p->exponent == 2);
  CHECK_FALSE(is_proper_power(w2("a*b")));
  const auto q = is_proper_power(w2("a^-1*b*b*a"));
  REQUIRE(q);
  CHECK(q->root == w2("a^-1*b*a"));
  CHECK(q->exponent == 2);
  CHECK(primitive_root(w2("a^6")).root == w2("a"));
  CHECK(primitive_root(w2("a^6")).exponent == 6);
}

TEST_CASE("power_of") {
  CHECK(power_of(w2("1"), w2("a*b")) == 0);
  CHECK(power_of(w2("a*b*a*b*a*b"), w2("a*b")) == 3);
  CHECK(power_of(w2("b^-1*a^-1"), w2("a*b")) == -1);
  CHECK_FALSE(power_of(w2("a*b*a"), w2("a*b")));
  CHECK_THROWS(power_of(w2("a"), w2("1")));
}

TEST_CASE("coset_minimum") {
  const auto [m, k] = coset_minimum(w2("a*b*a"), w2("a"), CosetSide::kLeft);
  CHECK(m == w2("a*b"));
  CHECK(k == -1);
  const auto [m2, k2] = coset_minimum(w2("b*a^3"), w2("a"), CosetSide::kRight);
  CHECK(m2 == w2("b*a^3"));
  CHECK(k2 == 0);
}

TEST_CASE("enumerate_words") {
  const auto words = enumerate_words(fixtures::ab(), 3);
  CHECK(words.size() == 1 + 4 + 12 + 36);
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(shortlex_less(words[i - 1], words[i]));
}

TEST_CASE("subgroup_membership") {
  const std::vector<Word> ab{w4("a"), w4("b")};
  CHECK(subgroup_membership(ab, w4("a*b^-1*a")).member);
  CHECK_FALSE(subgroup_membership(ab, w4("alpha")).member);
  const std::vector<Word> gg{w4("a*b"), w4("alpha*beta")};
  const auto r = subgroup_membership(gg, w4("a*b*alpha*beta*b^-1*a^-1"));
  REQUIRE(r.member);
  CHECK(r.witness->str() == "x1*x2*x1^-1");
  CHECK_FALSE(subgroup_membership(gg, w4("a")).member);

  // Random subgroup words are members and their witnesses evaluate back.
  Sampler rng(11);
  for (int i = 0; i < 100; ++i) {
    std::vector<Word> gens{rng.non_power(fixtures::rank4(), 4), rng.non_power(fixtures::rank4(), 4)};
    const FoldedSubgroup h(gens);
    const auto expr = rng.word_upto(h.generator_alphabet(), 5);
    const auto w = h.evaluate(expr);
    const auto m = h.contains(w);
    REQUIRE(m.member);
    CHECK(h.evaluate(*m.witness) == w);
  }
}
