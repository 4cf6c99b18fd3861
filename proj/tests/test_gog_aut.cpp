#include <doctest.h>

#include "fixtures.hpp"
#include "freegog/random.hpp"

using namespace freegog;

namespace {

const Pi1& pi1() { return fixtures::s4().fundamental_group(); }
const GoGAut& R() { return fixtures::s4().gogaut("R"); }
FreeAut phi() { return fixtures::s4().resolve_aut("phi"); }
int edge(const char* name) { return fixtures::three_vertex()->find_edge(name); }
Word in_vertex(const char* v, std::string_view text) {
  const auto gog = fixtures::three_vertex();
  return Word::parse(gog->vertex(gog->find_vertex(v)).alphabet, text);
}

}  // namespace

TEST_CASE("validate") {
  CHECK(R().validate().empty());
  CHECK(GoGAut::identity(fixtures::three_vertex()).validate().empty());
  // delta = g on ~e_w also satisfies the edge equation, but induces a different map.
  auto other_sign = R();
  other_sign.deltas[edge("~e_w")] = in_vertex("u", "a*b");
  CHECK(other_sign.validate().empty());
  CHECK(induced_aut(other_sign, pi1()) != phi());
  auto trivial = R();
  trivial.deltas[edge("~e_w")] = in_vertex("u", "1");
  CHECK(trivial.validate().empty());
  CHECK_FALSE(outer_equal(induced_aut(trivial, pi1()), phi()));
  // A delta outside the centraliser breaks the edge equation.
  auto broken = R();
  broken.deltas[edge("e_w")] = in_vertex("u", "a");
  const auto problems = broken.validate();
  REQUIRE(problems.size() == 1);
  CHECK(problems[0].find("e_w") != std::string::npos);
  CHECK_THROWS(broken.require_valid());
}

TEST_CASE("perturbing any delta is detected") {
  Sampler rng(12);
  const auto gog = fixtures::three_vertex();
  int rejected = 0;
  for (int i = 0; i < 60; ++i) {
    auto a = R();
    const int e = rng.uniform(0, gog->directed_edge_count() - 1);
    const auto noise = rng.word(a.deltas[e].alphabet(), rng.uniform(1, 3));
    const auto& image = gog->alpha(a.edge_map[e]);
    a.deltas[e] = noise * a.deltas[e];
    const bool central = noise * image == image * noise;
    CHECK(a.validate().empty() == central);
    rejected += !central;
  }
  CHECK(rejected > 40);
}

TEST_CASE("induced_aut") {
  CHECK(induced_aut(R(), pi1()) == phi());
  CHECK(induced_aut(GoGAut::identity(fixtures::three_vertex()), pi1()) == FreeAut::identity(pi1().basis()));
  const auto R2 = compose_gog(R(), R());
  CHECK(outer_equal(induced_aut(R2, pi1()), compose(phi(), phi())));
  CHECK(induced_aut(R2, pi1()) == compose(phi(), phi()));
}

TEST_CASE("compose_gog") {
  const auto R2 = compose_gog(R(), R());
  CHECK(R2.validate().empty());
  CHECK(R2.graph_map_trivial());
  CHECK(R2.deltas[edge("e_u")].empty());
  CHECK(R2.deltas[edge("~e_u")].str() == "b^-1*a^-1");
  CHECK(R2.deltas[edge("e_w")].empty());
  CHECK(R2.deltas[edge("~e_w")].str() == "beta^-1*alpha^-1");
  const auto id = GoGAut::identity(fixtures::three_vertex());
  const auto same = compose_gog(R(), id);
  CHECK(same.deltas == R().deltas);
  CHECK(same.vertex_map == R().vertex_map);
  const auto back = compose_gog(R(), inverse(R()));
  CHECK(induced_aut(back, pi1()) == FreeAut::identity(pi1().basis()));

  // Functoriality on the corpus.
  const auto& s = fixtures::s4();
  for (const auto& [x, a] : s.gogauts) {
    for (const auto& [y, b] : s.gogauts) {
      CHECK(outer_equal(induced_aut(compose_gog(a, b), pi1()), compose(induced_aut(a, pi1()), induced_aut(b, pi1()))));
    }
  }
}

TEST_CASE("twists") {
  const auto gog = fixtures::three_vertex();
  const auto tw = twist_exponents(compose_gog(R(), R()));
  REQUIRE(tw);
  CHECK(tw->exponents == std::vector<long>{1, 1});
  CHECK_FALSE(twist_exponents(R()));
  CHECK(twist_aut({gog, {0, 0}}, pi1()) == FreeAut::identity(pi1().basis()));
  CHECK(outer_equal(twist_aut({gog, {1, 1}}, pi1()), compose(phi(), phi())));
  const auto d = twist_aut({gog, {2, -1}}, pi1());
  const auto g = fixtures::w4("a*b"), gamma = fixtures::w4("alpha*beta");
  CHECK(d.image(0) == conjugate(fixtures::w4("a"), g.pow(2)));
  CHECK(d.image(1) == conjugate(fixtures::w4("b"), g.pow(2)));
  CHECK(d.image(2) == conjugate(fixtures::w4("alpha"), gamma.pow(-1)));
  CHECK(d.image(3) == conjugate(fixtures::w4("beta"), gamma.pow(-1)));
  const auto back = twist_exponents(twist_gog_aut({gog, {3, -2}}));
  REQUIRE(back);
  CHECK(back->exponents == std::vector<long>{3, -2});
}

TEST_CASE("is_root_of_dehn_twist") {
  const auto gog = fixtures::three_vertex();
  CHECK(is_root_of_dehn_twist(R(), {gog, {1, 1}}, 2, pi1()));
  CHECK(is_root_of_dehn_twist(GoGAut::identity(gog), {gog, {0, 0}}, 1, pi1()));
  CHECK_FALSE(is_root_of_dehn_twist(R(), {gog, {2, 2}}, 2, pi1()));
  CHECK_FALSE(is_root_of_dehn_twist(R(), {gog, {1, 2}}, 2, pi1()));
}

TEST_CASE("mu") {
  const auto gog = fixtures::three_vertex();
  const auto r2 = mu(compose_gog(R(), R()));
  CHECK(r2.trivial == std::vector<bool>{true, true, true});
  const auto tw = mu(twist_gog_aut({gog, {2, 3}}));
  CHECK(tw.trivial == std::vector<bool>{true, true, true});
  const auto psi = mu(fixtures::s4().gogaut("Psi"));
  CHECK(psi.trivial == std::vector<bool>{false, true, false});
  CHECK(psi.in_mccool_product());
  CHECK(psi.families[1].size() == 2);
  CHECK_THROWS(mu(R()));
  const auto restriction = vertex_power_restriction(R(), gog->find_vertex("u"));
  CHECK(restriction.period == 2);
  CHECK(restriction.restriction == FreeAut::identity(gog->vertex(0).alphabet));
}

TEST_CASE("twist_kernel_rank") {
  const auto cert = twist_kernel_rank(fixtures::three_vertex());
  CHECK(cert.rank == 2);
  CHECK(cert.pairs_checked == 300);
  CHECK(cert.independent());
  const auto one = GraphOfGroups::Builder()
                       .vertex("u", {"a", "b"})
                       .vertex("v", {"c", "d"})
                       .edge("e", "u", "v", {"a*b"}, {"c"})
                       .build();
  const auto c1 = twist_kernel_rank(one);
  CHECK(c1.rank == 1);
  CHECK(c1.independent());
}

TEST_CASE("induced_outer with a moved base") {
  const auto gog = fixtures::three_vertex();
  const Pi1 at_u(gog, gog->find_vertex("u"));
  CHECK_THROWS(induced_aut(R(), at_u));
  const auto connecting = parse_path(gog, "e_u * ~e_w", gog->find_vertex("u"));
  const auto cls = induced_outer(R(), at_u, connecting);
  // The square is a twist, so its outer class is that of a twist on this basis.
  const auto sq = compose(cls.representative(), cls.representative());
  CHECK(outer_equal(sq, twist_aut({gog, {1, 1}}, at_u)));
}

TEST_CASE("format_gog_aut round trip") {
  const auto& s = fixtures::s4();
  for (const auto& [name, a] : s.gogauts) {
    const auto text = format_gog_aut(a);
    const auto back = parse_gog_aut(s.gog, text);
    CHECK(back.deltas == a.deltas);
    CHECK(back.vertex_map == a.vertex_map);
    CHECK(back.edge_map == a.edge_map);
    CHECK(induced_aut(back, pi1()) == induced_aut(a, pi1()));
  }
}
