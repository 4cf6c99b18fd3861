#include "freegog/scenario.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace freegog {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  for (;;) {
    const auto at = s.find(sep, begin);
    out.push_back(trim(s.substr(begin, at == std::string_view::npos ? std::string_view::npos : at - begin)));
    if (at == std::string_view::npos) return out;
    begin = at + 1;
  }
}

std::vector<std::string> words_of(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

[[noreturn]] void fail(int line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

struct Line {
  int number;
  std::string text;
};

struct Block {
  std::string kind;  // aut or gogaut
  std::string name;
  std::optional<std::string> vertex;
  int line;
  std::string body;
};

/// `a -> alpha, b -> beta` as a generator-image table.
std::vector<Word> image_list(const AlphabetPtr& source, const AlphabetPtr& target, std::string_view text) {
  std::vector<std::optional<Word>> images(static_cast<std::size_t>(source->rank()));
  for (const auto& item : split(text, ',')) {
    const auto arrow = item.find("->");
    if (arrow == std::string::npos) throw ParseError("expected 'x -> word' in '" + item + "'");
    const auto lhs = trim(std::string_view(item).substr(0, arrow));
    const int index = source->find(lhs);
    if (index < 0) throw ParseError("unknown generator '" + lhs + "'");
    if (images[index]) throw ParseError("generator '" + lhs + "' given twice");
    images[index] = Word::parse(target, trim(std::string_view(item).substr(arrow + 2)));
  }
  std::vector<Word> out;
  for (int i = 0; i < source->rank(); ++i) {
    if (!images[i]) throw ParseError("no image for generator '" + source->name(i) + "'");
    out.push_back(*images[i]);
  }
  return out;
}

}  // namespace

GoGAut parse_gog_aut(const GogPtr& gog_ptr, std::string_view body) {
  const auto& gog = *gog_ptr;
  gog.require_free("gogaut");
  GoGAut a = GoGAut::identity(gog_ptr);
  std::vector<std::pair<int, std::string>> lines;
  {
    std::istringstream in{std::string(body)};
    int n = 0;
    for (std::string raw; std::getline(in, raw);) {
      ++n;
      std::string line = raw;
      if (const auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (!line.empty()) lines.emplace_back(n, line);
    }
  }

  bool vertex_moved = false;
  for (const auto& [n, line] : lines) {
    if (!starts_with(line, "map ")) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) fail(n, "expected 'map X -> Y'");
    const auto from = trim(std::string_view(line).substr(4, arrow - 4));
    auto rest = words_of(std::string_view(line).substr(arrow + 2));
    if (rest.empty()) fail(n, "missing map target");
    int sign = 1;
    if (rest.size() == 3 && rest[1] == "sign" && (rest[2] == "-1" || rest[2] == "1")) {
      sign = std::stoi(rest[2]);
    } else if (rest.size() != 1) {
      fail(n, "trailing text after map target");
    }
    if (const int v = gog.find_vertex(from); v >= 0) {
      const int w = gog.find_vertex(rest[0]);
      if (w < 0) fail(n, "unknown vertex '" + rest[0] + "'");
      a.vertex_map[v] = w;
      vertex_moved = vertex_moved || v != w;
    } else if (const int e = gog.find_edge(from); e >= 0) {
      const int f = gog.find_edge(rest[0]);
      if (f < 0) fail(n, "unknown edge '" + rest[0] + "'");
      a.edge_map[e] = f;
      a.edge_map[GraphOfGroups::bar(e)] = GraphOfGroups::bar(f);
      a.edge_sign[e] = a.edge_sign[GraphOfGroups::bar(e)] = sign;
    } else {
      fail(n, "unknown vertex or edge '" + from + "'");
    }
  }

  // Defaults: positional isomorphisms onto the image vertex group, trivial deltas.
  for (int v = 0; v < gog.vertex_count(); ++v) {
    const auto& source = gog.vertex(v).alphabet;
    const auto& target = gog.vertex(a.vertex_map[v]).alphabet;
    if (source->rank() != target->rank()) {
      a.vertex_isos[v] = FreeAut::identity(source);
      continue;
    }
    std::vector<int> images, signs;
    for (int i = 0; i < source->rank(); ++i) {
      images.push_back(i);
      signs.push_back(1);
    }
    a.vertex_isos[v] = FreeAut::relabel(source, target, images, signs);
  }
  for (int e = 0; e < gog.directed_edge_count(); ++e) a.deltas[e] = Word(gog.vertex(a.vertex_map[gog.tau(e)]).alphabet);

  for (const auto& [n, line] : lines) {
    if (starts_with(line, "map ")) continue;
    try {
      if (starts_with(line, "iso ")) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) fail(n, "expected 'iso <vertex>: ...'");
        const int v = gog.find_vertex(trim(std::string_view(line).substr(4, colon - 4)));
        if (v < 0) fail(n, "unknown vertex in iso");
        const auto& source = gog.vertex(v).alphabet;
        const auto& target = gog.vertex(a.vertex_map[v]).alphabet;
        const auto parts = split(std::string_view(line).substr(colon + 1), '|');
        if (parts.size() > 2) fail(n, "too many '|' in iso");
        auto forward = image_list(source, target, parts[0]);
        if (parts.size() == 2) {
          a.vertex_isos[v] = FreeAut(source, target, std::move(forward), image_list(target, source, parts[1]));
        } else {
          std::vector<int> images, signs;
          for (const auto& w : forward) {
            if (w.size() != 1) fail(n, "iso needs inverse images after '|' unless it permutes letters");
            images.push_back(letter_generator(w.front()));
            signs.push_back(letter_sign(w.front()));
          }
          a.vertex_isos[v] = FreeAut::relabel(source, target, images, signs);
        }
      } else if (starts_with(line, "delta ") || starts_with(line, "twist ")) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(n, "expected '='");
        const auto name = trim(std::string_view(line).substr(6, eq - 6));
        const int e = gog.find_edge(name);
        if (e < 0) fail(n, "unknown edge '" + name + "'");
        const auto value = trim(std::string_view(line).substr(eq + 1));
        if (starts_with(line, "delta ")) {
          a.deltas[e] = Word::parse(gog.vertex(a.vertex_map[gog.tau(e)]).alphabet, value);
        } else {
          if (a.vertex_map[gog.tau(e)] != gog.tau(e)) fail(n, "twist on an edge whose end vertex moves");
          a.deltas[e] = gog.alpha(e).pow(std::stol(value));
        }
      } else {
        fail(n, "unknown gogaut line '" + line + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& err) {
      fail(n, err.what());
    }
  }
  (void)vertex_moved;
  return a;
}

const Pi1& Scenario::fundamental_group() const {
  if (!pi1) throw Error("scenario '" + name + "': unsupported vertex group type");
  return *pi1;
}

FreeAut Scenario::resolve_aut(const std::string& object) const {
  if (const auto it = auts.find(object); it != auts.end()) return it->second;
  if (const auto it = gogauts.find(object); it != gogauts.end()) return induced_aut(it->second, fundamental_group());
  throw Error("unknown automorphism '" + object + "'");
}

const GoGAut& Scenario::gogaut(const std::string& object) const {
  const auto it = gogauts.find(object);
  if (it == gogauts.end()) throw Error("unknown gogaut '" + object + "'");
  return it->second;
}

Word Scenario::word(std::string_view text, std::optional<std::string> vertex) const {
  if (vertex) {
    const int v = gog->find_vertex(*vertex);
    if (v < 0) throw Error("unknown vertex '" + *vertex + "'");
    return Word::parse(gog->vertex(v).alphabet, text);
  }
  return Word::parse(fundamental_group().basis(), text);
}

Word Scenario::param(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) throw Error("scenario '" + name + "' has no param '" + key + "'");
  return word(it->second);
}

std::pair<long, long> Scenario::grid(const std::string& key, std::pair<long, long> fallback) const {
  const auto it = grids.find(key);
  return it == grids.end() ? fallback : it->second;
}

Scenario parse_scenario(std::string_view text) {
  Scenario s;
  std::vector<Line> top;
  std::vector<Block> blocks;
  {
    std::istringstream in{std::string(text)};
    int n = 0;
    std::optional<Block> open;
    for (std::string raw; std::getline(in, raw);) {
      ++n;
      std::string line = raw;
      if (const auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
      line = trim(line);
      if (open) {
        if (line == "end") {
          blocks.push_back(std::move(*open));
          open.reset();
        } else {
          open->body += line + "\n";
        }
        continue;
      }
      if (line.empty()) continue;
      const auto tokens = words_of(line);
      if (tokens[0] == "aut" || tokens[0] == "gogaut") {
        Block b{tokens[0], {}, std::nullopt, n, {}};
        if (tokens.size() == 2) {
          b.name = tokens[1];
        } else if (tokens[0] == "aut" && tokens.size() == 4 && tokens[2] == "on") {
          b.name = tokens[1];
          b.vertex = tokens[3];
        } else {
          fail(n, "expected '" + tokens[0] + " <name>" + (tokens[0] == "aut" ? " [on <vertex>]'" : "'"));
        }
        open = std::move(b);
        continue;
      }
      top.push_back({n, line});
    }
    if (open) fail(open->line, "block '" + open->name + "' is not closed by 'end'");
  }

  GraphOfGroups::Builder builder;
  bool any_vertex = false;
  std::set<std::string> vertex_names;
  std::vector<std::pair<int, std::string>> vertex_refs;
  for (const auto& [n, line] : top) {
    const auto tokens = words_of(line);
    const auto& head = tokens[0];
    if (head == "scenario") {
      if (tokens.size() != 2) fail(n, "expected 'scenario <name>'");
      s.name = tokens[1];
    } else if (head == "vertex") {
      const auto colon = line.find(':');
      if (colon == std::string::npos) fail(n, "expected 'vertex <name> : <gens>'");
      const auto name = trim(std::string_view(line).substr(6, colon - 6));
      auto rest = trim(std::string_view(line).substr(colon + 1));
      bool free = true;
      if (rest.size() >= 7 && rest.substr(rest.size() - 7) == "nonfree") {
        free = false;
        rest = trim(std::string_view(rest).substr(0, rest.size() - 7));
      }
      auto gens = split(rest, ',');
      for (const auto& g : gens) {
        if (g.empty() || g.find_first_of(" *^`~") != std::string::npos) fail(n, "bad generator name '" + g + "'");
      }
      vertex_names.insert(name);
      builder.vertex(name, std::move(gens), free);
      any_vertex = true;
    } else if (head == "edge") {
      const auto colon = line.find(':');
      if (colon == std::string::npos) fail(n, "expected 'edge <name> : <u> -> <v> ; z -> ... | ...'");
      const auto name = trim(std::string_view(line).substr(4, colon - 4));
      const auto parts = split(std::string_view(line).substr(colon + 1), ';');
      const auto ends = split(parts[0], '>');
      if (ends.size() != 2 || ends[0].empty() || ends[0].back() != '-') fail(n, "expected '<u> -> <v>'");
      const auto from = trim(std::string_view(ends[0]).substr(0, ends[0].size() - 1));
      std::vector<std::string> at_from, at_to;
      for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto arrow = parts[i].find("->");
        const auto bar = parts[i].find('|');
        if (arrow == std::string::npos || bar == std::string::npos || bar < arrow) {
          fail(n, "expected '<z> -> <word> | <word>'");
        }
        at_from.push_back(trim(std::string_view(parts[i]).substr(arrow + 2, bar - arrow - 2)));
        at_to.push_back(trim(std::string_view(parts[i]).substr(bar + 1)));
      }
      if (at_from.empty()) fail(n, "edge without edge-group images");
      vertex_refs.emplace_back(n, from);
      vertex_refs.emplace_back(n, trim(ends[1]));
      builder.edge(name, from, ends[1], at_from, at_to);
    } else if (head == "base") {
      if (tokens.size() != 2) fail(n, "expected 'base <vertex>'");
      vertex_refs.emplace_back(n, tokens[1]);
      builder.base(tokens[1]);
    } else if (line == "allow non-efficient") {
      builder.allow_non_efficient();
    } else if (head == "param") {
      const auto eq = line.find('=');
      if (tokens.size() < 4 || eq == std::string::npos) fail(n, "expected 'param <name> = <word>'");
      s.params[tokens[1]] = trim(std::string_view(line).substr(eq + 1));
    } else if (head == "grid") {
      const auto eq = line.find('=');
      const auto dots = line.find("..");
      if (tokens.size() < 4 || eq == std::string::npos || dots == std::string::npos) {
        fail(n, "expected 'grid <name> = <lo>..<hi>'");
      }
      try {
        const long lo = std::stol(trim(std::string_view(line).substr(eq + 1, dots - eq - 1)));
        const long hi = std::stol(trim(std::string_view(line).substr(dots + 2)));
        if (lo > hi) fail(n, "empty grid");
        s.grids[tokens[1]] = {lo, hi};
      } catch (const std::invalid_argument&) {
        fail(n, "grid bounds must be integers");
      }
    } else if (head == "check") {
      const auto eq = line.rfind('=');
      if (eq == std::string::npos) fail(n, "expected 'check <kind> <args> = true|false'");
      const auto value = trim(std::string_view(line).substr(eq + 1));
      if (value != "true" && value != "false") fail(n, "check outcome must be true or false");
      auto args = words_of(std::string_view(line).substr(5, eq - 5));
      if (args.empty()) fail(n, "check without a kind");
      CheckSpec spec{args.front(), {args.begin() + 1, args.end()}, value == "true", n};
      s.checks.push_back(std::move(spec));
    } else if (head == "suite") {
      if (tokens.size() != 2) fail(n, "expected 'suite <name>'");
      s.suites.push_back(tokens[1]);
    } else {
      fail(n, "unknown directive '" + head + "'");
    }
  }
  if (!any_vertex) throw ParseError("scenario has no vertices");
  for (const auto& [n, name] : vertex_refs) {
    if (!vertex_names.count(name)) fail(n, "unknown vertex '" + name + "'");
  }
  try {
    s.gog = builder.build();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw Error(std::string("graph of groups: ") + err.what());
  }
  if (s.gog->all_free()) s.pi1.emplace(s.gog);

  for (const auto& b : blocks) {
    if (s.auts.count(b.name) || s.gogauts.count(b.name)) fail(b.line, "duplicate object '" + b.name + "'");
    try {
      if (b.kind == "aut") {
        AlphabetPtr alphabet;
        if (b.vertex) {
          const int v = s.gog->find_vertex(*b.vertex);
          if (v < 0) fail(b.line, "unknown vertex '" + *b.vertex + "'");
          alphabet = s.gog->vertex(v).alphabet;
          s.aut_vertex[b.name] = *b.vertex;
        } else {
          alphabet = s.fundamental_group().basis();
        }
        s.auts.emplace(b.name, parse_aut(alphabet, b.body));
      } else {
        GoGAut a = parse_gog_aut(s.gog, b.body);
        const auto problems = a.validate();
        if (!problems.empty()) fail(b.line, "gogaut '" + b.name + "' is invalid: " + problems.front());
        s.gogauts.emplace(b.name, std::move(a));
      }
    } catch (const ParseError& err) {
      const std::string what = err.what();
      if (starts_with(what, "line ")) throw ParseError("in block '" + b.name + "' at line " + std::to_string(b.line) + ", " + what);
      fail(b.line, b.name + ": " + what);
    } catch (const Error& err) {
      fail(b.line, b.name + ": " + err.what());
    }
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

}  // namespace freegog
