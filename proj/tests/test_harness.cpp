#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "freegog/random.hpp"
#include "freegog/report.hpp"
#include "freegog/section4.hpp"

using namespace freegog;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string parse_error(std::string_view text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char* const kTiny =
    "scenario tiny\n"
    "vertex u : a, b\n"
    "vertex v : c, d\n"
    "edge e : u -> v ; z -> a*b | c\n"
    "base v\n";

}  // namespace

TEST_CASE("scenario parse errors carry line numbers") {
  CHECK(parse_error(std::string(kTiny) + "bogus line\n").find("line 6") != std::string::npos);
  CHECK(parse_error(std::string(kTiny) + "aut f\n  a -> b\n").find("line 6") != std::string::npos);
  CHECK(parse_error(std::string(kTiny) + "\naut f\n  x -> a\nend\n").find("line 7") != std::string::npos);
  CHECK(parse_error(std::string(kTiny) + "check valid R = maybe\n").find("line 6") != std::string::npos);
  CHECK(parse_error(std::string(kTiny) + "grid r = 3\n").find("line 6") != std::string::npos);
  CHECK(parse_error("vertex u : a\nedge e : u -> q ; z -> a | a\n").find("line 2") != std::string::npos);
  // Objects that parse but fail validation abort with their line.
  const auto bad_delta = std::string(kTiny) + "gogaut X\n  delta e = a\nend\n";
  CHECK(parse_error(bad_delta).find("line 6") != std::string::npos);
  CHECK_NOTHROW(parse_scenario(std::string(kTiny) + "gogaut T\n  twist e = 2\nend\n"));
}

TEST_CASE("shipped scenario files match the built-ins") {
  CHECK(slurp(FREEGOG_SOURCE_DIR "/scenarios/section4.scn") == section4_text("a*b"));
  CHECK(slurp(FREEGOG_SOURCE_DIR "/scenarios/mapping_torus.scn") == mapping_torus_text());
  const auto s = load_scenario(FREEGOG_SOURCE_DIR "/scenarios/section4.scn");
  CHECK(s.gogauts.size() == 4);
  CHECK(s.checks.size() == 21);
  CHECK(s.param("g").str() == "a*b");
  CHECK(s.grid("r", {0, 0}) == std::pair<long, long>{-3, 3});
}

TEST_CASE("empty filter gives an empty report") {
  RunOptions options;
  options.filter = std::vector<std::string>{};
  const auto report = run_scenario(fixtures::s4(), options);
  CHECK(report.results.empty());
  CHECK(report.ok());
  CHECK(format_jsonl(report).empty());
}

TEST_CASE("filters match names and dot prefixes") {
  RunOptions options;
  options.filter = std::vector<std::string>{"s4.fix", "s4.R.valid"};
  const auto report = run_scenario(fixtures::s4(), options);
  REQUIRE(report.results.size() == 4);
  CHECK(report.results[0].name == "s4.R.valid");
  for (const auto& r : report.results) CHECK(r.status == CheckStatus::kPass);
  options.filter = std::vector<std::string>{"s4.fi"};
  CHECK(run_scenario(fixtures::s4(), options).results.empty());
}

TEST_CASE("every check carries one anchor, names are sorted and unique") {
  const auto names = check_names(fixtures::s4());
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
  CHECK(names.size() == 55);
  CHECK(std::count_if(names.begin(), names.end(), [](const std::string& n) { return n.rfind("line", 0) == 0; }) == 21);
}

TEST_CASE("reports are deterministic for a seed") {
  RunOptions options;
  options.timing = false;
  options.filter = std::vector<std::string>{"prop.translation.conjugacy", "prop.inner", "s4.mccool.v"};
  const auto a = format_jsonl(run_scenario(fixtures::s4(), options));
  const auto b = format_jsonl(run_scenario(section4_scenario("a*b"), options));
  CHECK(a == b);
  CHECK(a.find("\"millis\":0") != std::string::npos);
  options.seed = 5;
  CHECK(format_jsonl(run_scenario(fixtures::s4(), options)) != a);
  CHECK(format_text(run_scenario(fixtures::s4(), options)) == format_text(run_scenario(fixtures::s4(), options)));
}

TEST_CASE("scenario check lines run against their expectations") {
  RunOptions options;
  options.filter = std::vector<std::string>{};
  for (const auto& n : check_names(fixtures::s4())) {
    if (n.rfind("line", 0) == 0) options.filter->push_back(n);
  }
  const auto report = run_scenario(fixtures::s4(), options);
  CHECK(report.results.size() == 21);
  CHECK(report.ok());
  // Flipping an expectation turns the line red.
  auto text = section4_text("a*b");
  const std::string from = "check inner phi = false", to = "check inner phi = true";
  text.replace(text.find(from), from.size(), to);
  const auto flipped_scenario = parse_scenario(text);
  options.filter = std::vector<std::string>{};
  for (const auto& n : check_names(flipped_scenario)) {
    if (n.rfind("line", 0) == 0) options.filter->push_back(n);
  }
  const auto flipped = run_scenario(flipped_scenario, options);
  CHECK_FALSE(flipped.ok());
  CHECK(flipped.count(CheckStatus::kFail) == 1);
}

TEST_CASE("mapping_torus parses and every check is unsupported") {
  const auto s = parse_scenario(mapping_torus_text());
  CHECK_FALSE(s.pi1.has_value());
  CHECK_THROWS_WITH_AS(s.fundamental_group(), doctest::Contains("unsupported vertex group type"), Error);
  const auto report = run_scenario(s);
  CHECK_FALSE(report.results.empty());
  CHECK(report.count(CheckStatus::kUnsupported) == report.results.size());
  CHECK(report.ok());
}

TEST_CASE("verify_fixed_claims") {
  const auto claims = verify_fixed_claims(fixtures::s4());
  REQUIRE(claims.size() == 3);
  for (const auto& c : claims) {
    CHECK(c.pass());
    CHECK(c.maximality == "not verified (out of scope)");
  }
  CHECK(claims[0].fixed_words == 1457);
  CHECK(claims[1].fixed_words == 53);
  CHECK(claims[2].fixed_words == 1457);
  CHECK(claims[1].generators == std::vector<std::string>{"a*b", "alpha*beta"});
}

TEST_CASE("section4 with g = a") {
  const auto s = section4_scenario("a");
  const auto report = run_scenario(s, {std::nullopt, 0, false});
  CHECK(report.results.size() == 55);
  CHECK(report.ok());
  CHECK(report.count(CheckStatus::kPass) == 55);
}

TEST_CASE("choose_psi") {
  const auto ab = fixtures::ab();
  const auto c = choose_psi(Word::parse(ab, "a*b"));
  CHECK_FALSE(c.fallback);
  CHECK(c.psi.image(0).str() == "a*b*a");
  CHECK(c.psi.image(1).str() == "a^-1");
  const auto d = choose_psi(Word::parse(ab, "a"));
  CHECK(d.psi.image(0).str() == "a");
  CHECK(d.psi.image(1).str() == "b^-1");
  Sampler rng(1);
  for (int i = 0; i < 5; ++i) {
    const auto g = rng.non_power(ab, 5);
    const auto p = choose_psi(g);
    CHECK(p.psi.apply(g) == g);
    CHECK(p.fallback == is_inner(p.psi).has_value());
  }
}
