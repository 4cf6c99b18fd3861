#pragma once

#include <string>
#include <string_view>

#include "freegog/free_aut.hpp"
#include "freegog/scenario.hpp"

namespace freegog {

/// Three-vertex example: u = <a,b>, v = <g,gamma>, w = <alpha,beta>, edges
/// e_u: u -> v and e_w: w -> v with cyclic groups <g> and <gamma>, based at v.
/// `g` is a word over a, b; gamma is its copy over alpha, beta.
std::string section4_text(std::string_view g = "a*b");
Scenario section4_scenario(std::string_view g = "a*b");

/// Two-vertex mapping-torus data with non-free vertex groups.  Parses and
/// validates; every computation on it is unsupported.
std::string mapping_torus_text();

struct PsiChoice {
  FreeAut psi;
  /// No non-inner automorphism fixing g was found; psi is Ad(g).
  bool fallback = false;
};

/// Non-inner automorphism of the alphabet of g fixing g exactly, of least
/// total image length among Nielsen products of at most `depth` moves
/// (each corrected by an inner automorphism).
PsiChoice choose_psi(const Word& g, int depth = 4);

/// a -> alpha, b -> beta.
Word copy_to_w(const Word& g, const AlphabetPtr& w_alphabet);

}  // namespace freegog
