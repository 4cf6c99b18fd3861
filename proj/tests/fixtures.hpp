#pragma once

#include "freegog/gog_aut.hpp"
#include "freegog/section4.hpp"

namespace fixtures {

using namespace freegog;

inline AlphabetPtr ab() {
  static const auto a = Alphabet::make({"a", "b"});
  return a;
}

inline AlphabetPtr rank4() {
  static const auto a = Alphabet::make({"a", "b", "alpha", "beta"});
  return a;
}

inline Word w2(std::string_view text) { return Word::parse(ab(), text); }
inline Word w4(std::string_view text) { return Word::parse(rank4(), text); }

/// The built-in scenario for g = a*b, parsed once.
inline const Scenario& s4() {
  static const Scenario s = section4_scenario("a*b");
  return s;
}

inline GogPtr three_vertex() { return s4().gog; }

}  // namespace fixtures
