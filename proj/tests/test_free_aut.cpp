#include <doctest.h>

#include "fixtures.hpp"
#include "freegog/kernels.hpp"
#include "freegog/random.hpp"

using namespace freegog;
using fixtures::w2;
using fixtures::w4;

namespace {

FreeAut phi() { return fixtures::s4().resolve_aut("phi"); }
FreeAut twist(long r, long s) { return twist_aut({fixtures::three_vertex(), {r, s}}, fixtures::s4().fundamental_group()); }

}  // namespace

TEST_CASE("construction checks the inverse") {
  const auto A = fixtures::ab();
  CHECK_NOTHROW(FreeAut(A, {w2("a*b"), w2("b")}, {w2("a*b^-1"), w2("b")}));
  CHECK_THROWS_AS(FreeAut(A, {w2("a*b"), w2("b")}, {w2("a"), w2("b")}), Error);
  CHECK_THROWS_AS(parse_aut(A, "a -> a*b\nb -> b\n"), ParseError);
  const auto swap = parse_aut(A, "a -> b\nb -> a^-1\n");
  CHECK(swap.apply_inverse(w2("b")) == w2("a"));
}

TEST_CASE("compose") {
  const auto p = phi();
  const auto p2 = compose(p, p);
  CHECK(p2.image(0) == w4("b^-1*a*b"));
  CHECK(p2.image(1) == w4("b^-1*a^-1*b*a*b"));
  CHECK(p2.image(2) == w4("beta^-1*alpha*beta"));
  CHECK(p2.image(3) == w4("beta^-1*alpha^-1*beta*alpha*beta"));
  CHECK(compose(p, FreeAut::identity(fixtures::rank4())) == p);
  const auto h = w2("a*b^-1"), k = w2("b*b*a");
  CHECK(compose(FreeAut::inner(h), FreeAut::inner(k)) == FreeAut::inner(h * k));
  CHECK(compose(p, p.inverse()) == FreeAut::identity(fixtures::rank4()));
  CHECK(power(p, -2) == compose(p.inverse(), p.inverse()));
}

TEST_CASE("is_inner") {
  CHECK(is_inner(FreeAut::inner(w2("a*b"))) == w2("a*b"));
  CHECK_FALSE(is_inner(phi()));
  // a -> a, b -> a^-1 b a is Ad(a).
  const auto ad_a = parse_aut(fixtures::ab(), "a -> a\nb -> a^-1*b*a\ninverse:\na -> a\nb -> a*b*a^-1\n");
  CHECK(is_inner(ad_a) == w2("a"));
  CHECK(kernels::brute_force_inner(fixtures::ab(), ad_a.images(), 4) == w2("a"));
  const auto transvection = parse_aut(fixtures::ab(), "a -> a\nb -> b*a\ninverse:\na -> a\nb -> b*a^-1\n");
  CHECK_FALSE(is_inner(transvection));
  CHECK_FALSE(kernels::brute_force_inner(fixtures::ab(), transvection.images(), 4));
  CHECK_THROWS(is_inner(FreeAut::identity(Alphabet::make({"t"}))));
}

TEST_CASE("outer_equal and outer_commutes") {
  const auto p = phi();
  const auto h = w4("a*beta^-1");
  CHECK(outer_equal(p, compose(FreeAut::inner(h), p)));
  CHECK(outer_equal(compose(p, p), twist(1, 1)));
  CHECK_FALSE(outer_equal(p, compose(p, p)));
  CHECK(outer_commutes(p, p));
  for (long r = -3; r <= 3; ++r) {
    for (long s = -3; s <= 3; ++s) {
      CHECK(outer_commutes(twist(r, s), p) == (r == s));
      CHECK(outer_commutes(twist(r, s), compose(p, p)));
    }
  }
  CHECK_FALSE(outer_equal(twist(1, 0), twist(0, 1)));
}

TEST_CASE("conjugate_aut") {
  const auto p = phi();
  CHECK(conjugate_aut(p, FreeAut::identity(fixtures::rank4())) == p);
  Sampler rng(2);
  for (int i = 0; i < 20; ++i) {
    const auto f = rng.automorphism(fixtures::rank4(), 4);
    CHECK(is_inner(conjugate_aut(FreeAut::inner(rng.word_upto(fixtures::rank4(), 4)), f)));
  }
  // D phi D^-1 at (r, s) = (2, -1): a -> alpha^{gamma^3}, alpha -> a^{g^-2}.
  const auto c = conjugate_aut(p, twist(2, -1).inverse());
  const auto g = w4("a*b"), gamma = w4("alpha*beta");
  CHECK(c.image(0) == conjugate(w4("alpha"), gamma.pow(3)));
  CHECK(c.image(2) == conjugate(w4("a"), g.pow(-2)));
}

TEST_CASE("mccool_membership") {
  const auto& s = fixtures::s4();
  const auto psi = s.resolve_aut("psi_u");
  CHECK(mccool_membership(psi, {w2("a*b")}).member);
  CHECK(mccool_membership(FreeAut::identity(fixtures::ab()), {w2("a"), w2("a*b*b")}).member);
  const auto flip = parse_aut(fixtures::ab(), "a -> a^-1\nb -> b\n");
  CHECK_FALSE(mccool_membership(flip, {w2("a*b")}).member);
  const auto m = mccool_membership(psi, {w2("a*b")}, FreeAut::inner(w2("b")));
  CHECK(m.member);
  REQUIRE(m.commutes);
  CHECK(*m.commutes);
  CHECK_THROWS(mccool_membership(psi, {w2("a*a")}));
}

TEST_CASE("text form round trip") {
  Sampler rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto f = rng.automorphism(fixtures::rank4(), 5);
    CHECK(parse_aut(format_aut(f)) == f);
  }
}

TEST_CASE("inner oracle agrees with brute force") {
  Sampler rng(4);
  const auto A = fixtures::ab();
  std::vector<std::vector<Word>> samples;
  for (int i = 0; i < 150; ++i) {
    const auto h = rng.word_upto(A, 2);
    std::vector<Word> images{conjugate(w2("a"), h), conjugate(w2("b"), h)};
    if (i % 2) images[1] = images[1] * w2("a");
    samples.push_back(images);
  }
  CHECK(kernels::inner_oracle_disagreements_serial(A, samples, 5).empty());
}
