#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freegog/free_aut.hpp"
#include "freegog/gog.hpp"
#include "freegog/gog_aut.hpp"
#include "freegog/pi1.hpp"

namespace freegog {

/// `check <kind> <args...> = true|false`.
struct CheckSpec {
  std::string kind;
  std::vector<std::string> args;
  bool expected = true;
  int line = 0;
};

/// A parsed scenario file.
///
///   scenario <name>
///   vertex <name> : <gen,gen,...> [nonfree]
///   edge <name> : <vertex> -> <vertex> ; z -> <word> | <word> [; z2 -> ... | ...]
///   base <vertex>
///   allow non-efficient
///   param <name> = <word>
///   grid <name> = <lo>..<hi>
///   aut <name> [on <vertex>]    ... `x -> word` lines, `inverse:` ...   end
///   gogaut <name>               ... map / iso / delta / twist lines ...  end
///   check <kind> <args...> = true|false
///   suite <name>
struct Scenario {
  std::string name;
  GogPtr gog;
  std::optional<Pi1> pi1;  // absent unless every vertex group is free
  std::map<std::string, FreeAut> auts;
  std::map<std::string, std::string> aut_vertex;  // auts declared `on <vertex>`
  std::map<std::string, GoGAut> gogauts;
  std::map<std::string, std::string> params;
  std::map<std::string, std::pair<long, long>> grids;
  std::vector<CheckSpec> checks;
  std::vector<std::string> suites;

  const Pi1& fundamental_group() const;
  /// An `aut`, or the automorphism of pi_1 induced by a `gogaut`.
  FreeAut resolve_aut(const std::string& name) const;
  const GoGAut& gogaut(const std::string& name) const;
  /// Parses a word over the pi_1 basis or, if `vertex` is given, over that
  /// vertex group.
  Word word(std::string_view text, std::optional<std::string> vertex = std::nullopt) const;
  Word param(const std::string& name) const;
  std::pair<long, long> grid(const std::string& name, std::pair<long, long> fallback) const;
};

/// Throws ParseError with a line number on malformed input, and Error on
/// objects that fail validation.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);

/// Parses a `gogaut` block body (without the header and `end`).
GoGAut parse_gog_aut(const GogPtr& gog, std::string_view body);

}  // namespace freegog
