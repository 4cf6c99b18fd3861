#include <doctest.h>

#include "fixtures.hpp"
#include "freegog/random.hpp"
#include "freegog/tree_ball.hpp"

using namespace freegog;

namespace {

PathWord path(std::string_view text) { return parse_path(fixtures::three_vertex(), text); }

}  // namespace

TEST_CASE("builder validation") {
  using B = GraphOfGroups::Builder;
  CHECK_THROWS(B().vertex("u", {"a"}).vertex("u", {"b"}).build());
  CHECK_THROWS(B().vertex("u", {"a"}).vertex("v", {"a"}).edge("e", "u", "v", {"a"}, {"a"}).build());
  CHECK_THROWS(B().vertex("u", {"a", "b"}).vertex("v", {"c"}).build());  // disconnected
  CHECK_THROWS(B().vertex("u", {"a", "b"}).vertex("v", {"c"}).edge("e", "u", "v", {"a*a"}, {"c"}).build());
  CHECK_NOTHROW(
      B().vertex("u", {"a", "b"}).vertex("v", {"c"}).edge("e", "u", "v", {"a*a"}, {"c"}).allow_non_efficient().build());
  CHECK_THROWS(B().vertex("u", {"a", "b"}).vertex("v", {"c"}).edge("~e", "u", "v", {"a"}, {"c"}).build());
  const auto gog = fixtures::three_vertex();
  CHECK(gog->vertex_count() == 3);
  CHECK(gog->geometric_edge_count() == 2);
  const int eu = gog->find_edge("e_u");
  CHECK(gog->find_edge("~e_u") == GraphOfGroups::bar(eu));
  CHECK(gog->alpha(eu).str() == "g");
  CHECK(gog->alpha(GraphOfGroups::bar(eu)).str() == "a*b");
  CHECK(gog->efficient());
}

TEST_CASE("britton_reduce") {
  const auto gog = fixtures::three_vertex();
  CHECK(is_trivial(path("e_u * ~e_u")));
  CHECK(britton_reduce(path("e_u * ~e_u")).start() == gog->find_vertex("u"));
  const auto r = britton_reduce(path("~e_u * `a*b` * e_u"));
  CHECK(r.edge_count() == 0);
  CHECK(r.str() == "`g`");
  const auto keep = path("~e_u * `a` * e_u");
  CHECK(britton_reduce(keep) == keep);
  CHECK(is_britton_reduced(keep));
  CHECK(britton_reduce(path("~e_u * `a*b*a*b` * e_u * `gamma` * ~e_u * `b^-1*a^-1` * e_u")).str() == "`g^2*gamma*g^-1`");
}

TEST_CASE("pi1_equal") {
  const auto p = path("~e_u * `a` * e_u * ~e_u * `b` * e_u");
  CHECK(pi1_equal(p, p));
  CHECK(pi1_equal(p, path("~e_u * `a*b` * e_u")));
  CHECK_FALSE(pi1_equal(path("~e_u * `a` * e_u"), path("~e_w * `alpha` * e_w")));
}

TEST_CASE("translation_length") {
  CHECK(translation_length(path("`g*gamma`")) == 0);
  CHECK(translation_length(path("~e_u * `a` * e_u")) == 0);
  CHECK(translation_length(path("~e_u * `a` * e_u * ~e_w * `alpha` * e_w")) == 4);
  CHECK(translation_length(path("~e_u * `a*b` * e_u * ~e_w * `alpha*beta` * e_w")) == 0);
  const TreeBall ball(fixtures::three_vertex(), fixtures::three_vertex()->base(), 6, 1);
  const auto p = path("~e_u * `a` * e_u * ~e_w * `alpha` * e_w");
  CHECK(ball.fits(p));
  CHECK(ball.min_displacement(p) == 4);
}

TEST_CASE("pi1 presentation and basis") {
  const auto& pi1 = fixtures::s4().fundamental_group();
  CHECK(pi1.recognised_free());
  CHECK(pi1.basis()->names() == std::vector<std::string>{"a", "b", "alpha", "beta"});
  CHECK(pi1.basis_loop(0).str() == "~e_u * `a` * e_u");
  CHECK(pi1.basis_loop(3).str() == "~e_w * `beta` * e_w");
  CHECK(pi1.relators().size() == 2);
  for (int i = 0; i < pi1.basis()->rank(); ++i) {
    CHECK(pi1.to_basis(pi1.basis_loop(i)) == Word::generator(pi1.basis(), i));
  }
  const auto g_loop = PathWord::vertex_element(fixtures::three_vertex(), 1, Word::parse(fixtures::three_vertex()->vertex(1).alphabet, "g"));
  CHECK(pi1.to_basis(g_loop).str() == "a*b");
}

TEST_CASE("extend_homomorphism on the three-vertex example") {
  const auto& pi1 = fixtures::s4().fundamental_group();
  const auto gog = fixtures::three_vertex();
  // Exponent sum of a and alpha.
  const AbelianTarget z{1};
  const auto hom = extend_homomorphism(pi1, z, rho_from_basis(pi1, z, {{1}, {0}, {1}, {0}}));
  CHECK(hom.edge(gog->find_edge("e_u")) == AbelianTarget::Value{0});
  CHECK(hom.edge(gog->find_edge("e_w")) == AbelianTarget::Value{0});
  CHECK(hom.vertex_generator(gog->find_vertex("u"), 0) == AbelianTarget::Value{1});
  CHECK(hom.vertex_generator(gog->find_vertex("v"), 0) == AbelianTarget::Value{1});
  CHECK(hom.relation_failures().empty());
  // Values that do not kill the relators are rejected.
  std::vector<AbelianTarget::Value> bad(static_cast<std::size_t>(pi1.presentation_alphabet()->rank()), {0});
  bad[0] = {1};
  CHECK_THROWS(extend_homomorphism(pi1, z, bad));
}

TEST_CASE("extend_homomorphism on random graphs") {
  Sampler rng(21);
  for (int i = 0; i < 10; ++i) {
    const auto gog = rng.three_vertex_gog(i);
    const Pi1 pi1(gog);
    REQUIRE(pi1.recognised_free());
    FreeTarget f{Alphabet::make({"p", "q"})};
    std::vector<Word> images;
    for (int k = 0; k < pi1.basis()->rank(); ++k) images.push_back(rng.word(f.alphabet, 2));
    const auto hom = extend_homomorphism(pi1, f, rho_from_basis(pi1, f, images));
    CHECK(hom.relation_failures().empty());
    for (int k = 0; k < 20; ++k) {
      const auto loop = rng.loop(gog, gog->base(), 6, 2);
      CHECK(hom.evaluate(loop) == substitute(pi1.to_basis(loop), images, f.alphabet));
    }
  }
}

TEST_CASE("tree ball") {
  const auto gog = fixtures::three_vertex();
  CHECK(TreeBall(gog, gog->base(), 0, 1).vertex_count() == 1);
  const TreeBall one(gog, gog->base(), 1, 1);
  CHECK(one.vertex_count() == 7);
  const TreeBall six(gog, gog->base(), 6, 1);
  CHECK(six.vertex_count() == 5785);
  CHECK(six.is_tree());
  CHECK_THROWS(TreeBall(gog, gog->base(), 7, 1));
}

TEST_CASE("translation length properties") {
  const auto gog = fixtures::three_vertex();
  Sampler rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto p = rng.loop(gog, gog->base(), 10, 3);
    const auto q = rng.loop(gog, gog->base(), 6, 3);
    CHECK(translation_length(p) == translation_length(q.inverse() * p * q));
    CHECK(translation_length(p.pow(3)) == 3 * translation_length(p));
    CHECK(translation_length(p) % 2 == 0);
  }
}
