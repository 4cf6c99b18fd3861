#include "freegog/section4.hpp"

#include <map>
#include <sstream>

namespace freegog {

namespace {

/// Elementary Nielsen automorphisms of a rank-2 (or higher) free group.
std::vector<FreeAut> nielsen_moves(const AlphabetPtr& alphabet) {
  std::vector<FreeAut> moves;
  const int n = alphabet->rank();
  auto gens = [&] {
    std::vector<Word> out;
    for (int i = 0; i < n; ++i) out.push_back(Word::generator(alphabet, i));
    return out;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int sign : {1, -1}) {
        const Word xj = Word::generator(alphabet, j, sign);
        auto fwd = gens(), bwd = gens();
        fwd[i] = fwd[i] * xj;
        bwd[i] = bwd[i] * xj.inverse();
        moves.emplace_back(alphabet, fwd, bwd);
        fwd = gens(), bwd = gens();
        fwd[i] = xj * fwd[i];
        bwd[i] = xj.inverse() * bwd[i];
        moves.emplace_back(alphabet, fwd, bwd);
      }
    }
    auto inv = gens();
    inv[i] = inv[i].inverse();
    moves.emplace_back(alphabet, inv, inv);
  }
  return moves;
}

std::size_t total_length(const FreeAut& f) {
  std::size_t n = 0;
  for (const auto& w : f.images()) n += w.size();
  return n;
}

std::string aut_block(const FreeAut& f, const std::string& indent) {
  std::ostringstream out;
  const auto& alphabet = *f.source();
  for (int i = 0; i < alphabet.rank(); ++i) out << indent << alphabet.name(i) << " -> " << f.image(i).str() << '\n';
  out << indent << "inverse:\n";
  for (int i = 0; i < alphabet.rank(); ++i) out << indent << alphabet.name(i) << " -> " << f.inverse_image(i).str() << '\n';
  return out.str();
}

std::string image_list(const FreeAut& f, bool inverse) {
  std::string out;
  const auto& alphabet = *(inverse ? f.target() : f.source());
  for (int i = 0; i < alphabet.rank(); ++i) {
    if (i) out += ", ";
    out += alphabet.name(i) + " -> " + (inverse ? f.inverse_image(i) : f.image(i)).str();
  }
  return out;
}

}  // namespace

Word copy_to_w(const Word& g, const AlphabetPtr& w_alphabet) {
  return Word(w_alphabet, g.letters());
}

PsiChoice choose_psi(const Word& g, int depth) {
  const auto& alphabet = g.alphabet();
  const auto moves = nielsen_moves(alphabet);
  std::map<std::string, FreeAut> seen;
  std::vector<FreeAut> frontier{FreeAut::identity(alphabet)};
  std::optional<FreeAut> best;
  std::string best_key;
  for (int d = 0; d <= depth; ++d) {
    std::vector<FreeAut> next;
    for (const auto& f : frontier) {
      if (const auto h = are_conjugate(g, f.apply(g))) {
        // (g)f == h^-1 g h, so f Ad(h^-1) fixes g.
        const FreeAut fixed = compose(f, FreeAut::inner(h->inverse()));
        if (!is_inner(fixed)) {
          const auto key = format_aut(fixed);
          if (!best || total_length(fixed) < total_length(*best) ||
              (total_length(fixed) == total_length(*best) && key < best_key)) {
            best = fixed;
            best_key = key;
          }
        }
      }
      if (d == depth) continue;
      for (const auto& m : moves) {
        auto c = compose(f, m);
        if (seen.emplace(format_aut(c), c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  if (best) return {*best, false};
  return {FreeAut::inner(g), true};
}

std::string section4_text(std::string_view g_text) {
  const auto u = Alphabet::make({"a", "b"});
  const auto w = Alphabet::make({"alpha", "beta"});
  const auto basis = Alphabet::make({"a", "b", "alpha", "beta"});
  const Word g = Word::parse(u, g_text);
  if (g.empty()) throw Error("section4: g must be nontrivial");
  const Word gamma = copy_to_w(g, w);
  const Word gb(basis, g.letters());
  Word gammab(basis, {});
  for (Letter l : g.letters()) gammab *= Word::generator(basis, letter_generator(l) + 2, letter_sign(l));
  auto x = [&](int i) { return Word::generator(basis, i); };

  const FreeAut phi(basis, {x(2), x(3), conjugate(x(0), gb), conjugate(x(1), gb)},
                    {conjugate(x(2), gammab.inverse()), conjugate(x(3), gammab.inverse()), x(0), x(1)});
  const FreeAut phi2(basis, {conjugate(x(0), gb), conjugate(x(1), gb), conjugate(x(2), gammab), conjugate(x(3), gammab)},
                     {conjugate(x(0), gb.inverse()), conjugate(x(1), gb.inverse()), conjugate(x(2), gammab.inverse()),
                      conjugate(x(3), gammab.inverse())});
  const auto psi_u = choose_psi(g).psi;
  std::vector<Word> fw, bw;
  for (const auto& img : psi_u.images()) fw.push_back(copy_to_w(img, w));
  for (const auto& img : psi_u.inverse_images()) bw.push_back(copy_to_w(img, w));
  const FreeAut psi_w(w, fw, bw);

  std::ostringstream out;
  out << "scenario section4\n"
      << "vertex u : a, b\n"
      << "vertex v : g, gamma\n"
      << "vertex w : alpha, beta\n"
      << "edge e_u : u -> v ; z -> " << g.str() << " | g\n"
      << "edge e_w : w -> v ; z -> " << gamma.str() << " | gamma\n"
      << "base v\n"
      << "param g = " << gb.str() << '\n'
      << "param gamma = " << gammab.str() << '\n'
      << "grid r = -3..3\n"
      << "grid s = -3..3\n\n"
      << "aut phi\n" << aut_block(phi, "  ") << "end\n\n"
      << "aut phi2\n" << aut_block(phi2, "  ") << "end\n\n"
      << "aut psi_u on u\n" << aut_block(psi_u, "  ") << "end\n\n"
      << "aut psi_w on w\n" << aut_block(psi_w, "  ") << "end\n\n"
      << "gogaut R\n"
      << "  map u -> w\n"
      << "  map w -> u\n"
      << "  map e_u -> e_w\n"
      << "  map e_w -> e_u\n"
      << "  iso v: g -> gamma, gamma -> g\n"
      << "  delta ~e_w = " << g.inverse().str() << '\n'
      << "end\n\n"
      << "gogaut Psi\n"
      << "  iso u: " << image_list(psi_u, false) << " | " << image_list(psi_u, true) << '\n'
      << "  iso w: " << image_list(psi_w, false) << " | " << image_list(psi_w, true) << '\n'
      << "end\n\n"
      << "gogaut PsiPrime\n"
      << "  iso u: " << image_list(psi_u, false) << " | " << image_list(psi_u, true) << '\n'
      << "end\n\n"
      << "gogaut D11\n"
      << "  twist e_u = 1\n"
      << "  twist e_w = 1\n"
      << "end\n\n"
      << "check valid R = true\n"
      << "check equal R phi = true\n"
      << "check equal phi*phi phi2 = true\n"
      << "check inner phi = false\n"
      << "check outer_equal R*R D11 = true\n"
      << "check outer_equal D11 phi2 = true\n"
      << "check twist R*R 1 1 = true\n"
      << "check twist R = false\n"
      << "check root R 2 1 1 = true\n"
      << "check root R 2 2 2 = false\n"
      << "check fixes psi_u " << g.str() << " = true\n"
      << "check fixes psi_w " << gamma.str() << " = true\n"
      << "check inner psi_u = false\n"
      << "check commutes Psi phi = true\n"
      << "check commutes PsiPrime phi = false\n"
      << "check commutes PsiPrime phi2 = true\n"
      << "check commutes D11 phi = true\n"
      << "check mu_trivial D11 = true\n"
      << "check mu_trivial R*R = true\n"
      << "check mu_trivial Psi = false\n"
      << "check twist_rank 2 = true\n\n"
      << "suite section4\n"
      << "suite generic\n";
  return out.str();
}

Scenario section4_scenario(std::string_view g) { return parse_scenario(section4_text(g)); }

std::string mapping_torus_text() {
  return "scenario mapping_torus\n"
         "vertex u : a, b, t2 nonfree\n"
         "vertex v : g, gamma, t nonfree\n"
         "edge e : u -> v ; z1 -> a*b | g ; z2 -> t2 | t^2\n"
         "base v\n"
         "allow non-efficient\n"
         "check twist_rank 1 = true\n"
         "suite section4\n";
}

}  // namespace freegog
