#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "freegog/report.hpp"
#include "freegog/section4.hpp"

using namespace freegog;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Scenario scenario_named(const std::string& ref, const std::string& g) {
  if (ref == "section4") return section4_scenario(g);
  if (ref == "mapping_torus") return parse_scenario(mapping_torus_text());
  return load_scenario(ref);
}

/// `scenario:name`, or a file holding a single `x -> word` automorphism.
FreeAut aut_ref(const std::string& ref, const std::string& g) {
  const auto colon = ref.rfind(':');
  if (colon == std::string::npos) return parse_aut(read_file(ref));
  return scenario_named(ref.substr(0, colon), g).resolve_aut(ref.substr(colon + 1));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free groups, graphs of groups and their automorphisms"};
  app.require_subcommand(1);
  std::string g = "a*b";
  app.add_option("--g", g, "g for the built-in section4 scenario (a word in a, b)");
  int status = 0;

  std::string word_text;
  auto* reduce = app.add_subcommand("reduce", "Freely and cyclically reduce a word");
  reduce->add_option("word", word_text)->required();
  reduce->callback([&] {
    const auto w = parse_word_inferring_alphabet(word_text);
    const auto c = cyclic_reduce(w);
    std::cout << w.str() << "\ncyclic " << c.core.str() << " conjugator " << c.conjugator.str() << '\n';
  });

  std::string lhs, rhs;
  auto* compose_cmd = app.add_subcommand("compose", "f then g");
  compose_cmd->add_option("f", lhs)->required();
  compose_cmd->add_option("g", rhs)->required();
  compose_cmd->callback([&] { std::cout << format_aut(compose(aut_ref(lhs, g), aut_ref(rhs, g))); });

  auto* inner_cmd = app.add_subcommand("inner", "Decide whether an automorphism is inner");
  inner_cmd->add_option("f", lhs)->required();
  inner_cmd->callback([&] {
    const auto h = is_inner(aut_ref(lhs, g));
    std::cout << (h ? "inner Ad(" + h->str() + ")" : "not inner") << '\n';
  });

  auto* commute_cmd = app.add_subcommand("commute", "Decide whether two outer classes commute");
  commute_cmd->add_option("f", lhs)->required();
  commute_cmd->add_option("g", rhs)->required();
  commute_cmd->callback([&] {
    std::cout << (outer_commutes(aut_ref(lhs, g), aut_ref(rhs, g)) ? "commute" : "do not commute") << '\n';
  });

  auto* mu_cmd = app.add_subcommand("mu", "Vertex outer classes of a graph-of-groups automorphism");
  mu_cmd->add_option("gogaut", lhs, "scenario:name")->required();
  mu_cmd->callback([&] {
    const auto colon = lhs.rfind(':');
    if (colon == std::string::npos) throw Error("mu: expected scenario:name");
    const auto s = scenario_named(lhs.substr(0, colon), g);
    const auto report = mu(s.gogaut(lhs.substr(colon + 1)));
    for (int v = 0; v < s.gog->vertex_count(); ++v) {
      std::cout << s.gog->vertex(v).name << ": " << (report.trivial[v] ? "inner" : "outer") << ", McCool "
                << (report.mccool[v].member ? "yes" : "no") << '\n';
      if (!report.trivial[v]) std::cout << format_aut(report.classes[v].representative());
    }
  });

  std::string scenario_ref;
  auto* rank_cmd = app.add_subcommand("twist-rank", "Rank of the group of Dehn twists");
  rank_cmd->add_option("scenario", scenario_ref)->required();
  rank_cmd->callback([&] {
    const auto cert = twist_kernel_rank(scenario_named(scenario_ref, g).gog);
    std::cout << "rank " << cert.rank << ", " << cert.pairs_checked << " pairs in [-" << cert.bound << "," << cert.bound
              << "], " << cert.collisions.size() << " collisions\n";
    status = cert.independent() ? 0 : 1;
  });

  std::optional<std::string> checks;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool no_timing = false;
  auto* run_cmd = app.add_subcommand("run", "Run the checks of a scenario");
  run_cmd->add_option("scenario", scenario_ref, "section4, mapping_torus or a scenario file")->required();
  run_cmd->add_option("--checks", checks, "comma-separated names or prefixes");
  run_cmd->add_option("--seed", seed);
  run_cmd->add_option("--g", g);
  run_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "jsonl"}));
  run_cmd->add_flag("--no-timing", no_timing);
  run_cmd->callback([&] {
    RunOptions options;
    options.seed = seed;
    options.timing = !no_timing;
    if (checks) options.filter = split_list(*checks);
    const auto report = run_scenario(scenario_named(scenario_ref, g), options);
    std::cout << (format == "jsonl" ? format_jsonl(report) : format_text(report));
    status = report.ok() ? 0 : 1;
  });

  auto* fix_cmd = app.add_subcommand("verify-section4", "Fixed-subgroup claims of the built-in scenario");
  fix_cmd->add_option("--g", g);
  fix_cmd->callback([&] {
    const auto claims = verify_fixed_claims(section4_scenario(g));
    std::cout << format_fix_claims(claims);
    for (const auto& c : claims) status = c.pass() ? status : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
