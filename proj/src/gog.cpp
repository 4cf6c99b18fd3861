#include "freegog/gog.hpp"

#include <cctype>
#include <queue>
#include <set>
#include <sstream>

namespace freegog {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GraphOfGroups::Builder& GraphOfGroups::Builder::vertex(std::string name, std::vector<std::string> generators,
                                                       bool free) {
  vertices_.push_back({std::move(name), Alphabet::make(std::move(generators)), free});
  return *this;
}

GraphOfGroups::Builder& GraphOfGroups::Builder::edge(std::string name, std::string_view from, std::string_view to,
                                                     std::vector<std::string> at_from,
                                                     std::vector<std::string> at_to) {
  edges_.push_back({std::move(name), std::string(from), std::string(to), std::move(at_from), std::move(at_to)});
  return *this;
}

GraphOfGroups::Builder& GraphOfGroups::Builder::base(std::string_view vertex) {
  base_ = std::string(vertex);
  return *this;
}

GraphOfGroups::Builder& GraphOfGroups::Builder::allow_non_efficient(bool allow) {
  allow_non_efficient_ = allow;
  return *this;
}

GogPtr GraphOfGroups::Builder::build() const {
  std::shared_ptr<GraphOfGroups> gog(new GraphOfGroups());
  if (vertices_.empty()) throw Error("graph of groups without vertices");

  std::set<std::string> vertex_names, generator_names, edge_names;
  for (const auto& v : vertices_) {
    if (v.name.empty() || v.name.front() == '~') throw Error("bad vertex name '" + v.name + "'");
    if (!vertex_names.insert(v.name).second) throw Error("duplicate vertex '" + v.name + "'");
    if (v.alphabet->rank() == 0) throw Error("vertex '" + v.name + "' has no generators");
    for (const auto& g : v.alphabet->names()) {
      if (!generator_names.insert(g).second) throw Error("generator '" + g + "' used at two vertices");
    }
    gog->vertices_.push_back(v);
    gog->all_free_ = gog->all_free_ && v.free;
  }

  for (const auto& pending : edges_) {
    if (pending.name.empty() || pending.name.front() == '~' || vertex_names.count(pending.name) ||
        generator_names.count(pending.name)) {
      throw Error("bad edge name '" + pending.name + "'");
    }
    if (!edge_names.insert(pending.name).second) throw Error("duplicate edge '" + pending.name + "'");
    const int from = gog->find_vertex(pending.from);
    const int to = gog->find_vertex(pending.to);
    if (from < 0 || to < 0) throw Error("edge '" + pending.name + "' has an unknown endpoint");
    if (pending.at_from.size() != pending.at_to.size() || pending.at_from.empty()) {
      throw Error("edge '" + pending.name + "' needs matching images at both ends");
    }
    const bool free_ends = gog->vertices_[from].free && gog->vertices_[to].free;
    if (free_ends && pending.at_from.size() != 1) {
      throw Error("edge '" + pending.name + "' between free vertex groups must be cyclic");
    }
    DirectedEdge forward{pending.name, from, to, {}};
    DirectedEdge backward{"~" + pending.name, to, from, {}};
    for (std::size_t i = 0; i < pending.at_from.size(); ++i) {
      try {
        forward.images.push_back(Word::parse(gog->vertices_[to].alphabet, pending.at_to[i]));
        backward.images.push_back(Word::parse(gog->vertices_[from].alphabet, pending.at_from[i]));
      } catch (const ParseError& err) {
        throw Error("edge '" + pending.name + "': " + err.what());
      }
    }
    if (free_ends) {
      for (const Word* w : {&forward.images.front(), &backward.images.front()}) {
        if (w->empty()) throw Error("edge '" + pending.name + "' has a trivial image");
        if (is_proper_power(*w)) {
          if (!allow_non_efficient_) {
            throw Error("edge '" + pending.name + "' image " + w->str() + " is a proper power");
          }
          gog->efficient_ = false;
        }
      }
    }
    gog->edges_.push_back(std::move(forward));
    gog->edges_.push_back(std::move(backward));
  }

  gog->base_ = base_.empty() ? 0 : gog->find_vertex(base_);
  if (gog->base_ < 0) throw Error("unknown base vertex '" + base_ + "'");

  std::vector<bool> seen(gog->vertices_.size(), false);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (const auto& e : gog->edges_) {
      if (e.from == v && !seen[e.to]) {
        seen[e.to] = true;
        queue.push(e.to);
      }
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) throw Error("graph is not connected: vertex '" + gog->vertices_[v].name + "' is unreachable");
  }
  return gog;
}

int GraphOfGroups::find_vertex(std::string_view name) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices_[v].name == name) return v;
  }
  return -1;
}

int GraphOfGroups::find_edge(std::string_view name) const {
  for (int e = 0; e < directed_edge_count(); ++e) {
    if (edges_[e].name == name) return e;
  }
  return -1;
}

const Word& GraphOfGroups::alpha(int e) const {
  const auto& images = edges_.at(e).images;
  if (images.size() != 1) throw Error("edge '" + edges_[e].name + "' does not have a cyclic edge group");
  return images.front();
}

void GraphOfGroups::require_free(std::string_view operation) const {
  if (!all_free_) throw Error(std::string(operation) + ": unsupported vertex group type");
}

int GraphOfGroups::vertex_of_generator(std::string_view name) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices_[v].alphabet->find(name) >= 0) return v;
  }
  return -1;
}

PathWord::PathWord(GogPtr gog, int start) : gog_(std::move(gog)), start_(start) {
  elements_.emplace_back(gog_->vertex(start).alphabet);
}

PathWord PathWord::vertex_element(GogPtr gog, int v, Word w) {
  PathWord p(std::move(gog), v);
  p.push_element(w);
  return p;
}

PathWord PathWord::edge(GogPtr gog, int e) {
  PathWord p(gog, gog->iota(e));
  p.push_edge(e);
  return p;
}

int PathWord::end() const { return edges_.empty() ? start_ : gog_->tau(edges_.back()); }

void PathWord::push_edge(int e) {
  if (gog_->iota(e) != end()) throw Error("path: edge " + gog_->edge(e).name + " does not start at the current vertex");
  edges_.push_back(e);
  elements_.emplace_back(gog_->vertex(gog_->tau(e)).alphabet);
}

void PathWord::push_element(const Word& w) { elements_.back() *= w; }

PathWord PathWord::operator*(const PathWord& other) const {
  if (gog_ != other.gog_) throw Error("path product across graphs of groups");
  if (end() != other.start()) throw Error("path product: endpoints do not match");
  PathWord out = *this;
  out.push_element(other.elements_.front());
  for (std::size_t i = 0; i < other.edges_.size(); ++i) {
    out.push_edge(other.edges_[i]);
    out.push_element(other.elements_[i + 1]);
  }
  return out;
}

PathWord PathWord::inverse() const {
  PathWord out(gog_, end());
  out.push_element(elements_.back().inverse());
  for (std::size_t i = edges_.size(); i-- > 0;) {
    out.push_edge(GraphOfGroups::bar(edges_[i]));
    out.push_element(elements_[i].inverse());
  }
  return out;
}

PathWord PathWord::pow(long n) const {
  if (!is_loop()) throw Error("power of a path that is not a loop");
  const PathWord base = n >= 0 ? *this : inverse();
  PathWord out(gog_, start_);
  for (long i = 0; i < (n >= 0 ? n : -n); ++i) out *= base;
  return out;
}

bool PathWord::operator==(const PathWord& other) const {
  return gog_ == other.gog_ && start_ == other.start_ && edges_ == other.edges_ && elements_ == other.elements_;
}

std::string PathWord::str() const {
  std::vector<std::string> parts;
  auto element = [&](const Word& w) {
    if (!w.empty()) parts.push_back("`" + w.str() + "`");
  };
  element(elements_.front());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    parts.push_back(gog_->edge(edges_[i]).name);
    element(elements_[i + 1]);
  }
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " * " + parts[i];
  return out;
}

PathWord britton_reduce(const PathWord& p) {
  const auto& gog = *p.gog();
  gog.require_free("britton_reduce");
  std::vector<Word> elements{p.elements().front()};
  std::vector<int> edges;
  for (std::size_t i = 0; i < p.edges().size(); ++i) {
    const int e = p.edges()[i];
    const Word& next = p.elements()[i + 1];
    if (!edges.empty() && e == GraphOfGroups::bar(edges.back())) {
      const int last = edges.back();
      if (const auto k = power_of(elements.back(), gog.alpha(last))) {
        elements.pop_back();
        edges.pop_back();
        elements.back() = elements.back() * gog.alpha(GraphOfGroups::bar(last)).pow(*k) * next;
        continue;
      }
    }
    edges.push_back(e);
    elements.push_back(next);
  }
  PathWord out(p.gog(), p.start());
  out.push_element(elements.front());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out.push_edge(edges[i]);
    out.push_element(elements[i + 1]);
  }
  return out;
}

bool is_britton_reduced(const PathWord& p) {
  const auto& gog = *p.gog();
  for (std::size_t i = 0; i + 1 < p.edges().size(); ++i) {
    const int e = p.edges()[i];
    if (p.edges()[i + 1] == GraphOfGroups::bar(e) && power_of(p.elements()[i + 1], gog.alpha(e))) return false;
  }
  return true;
}

bool is_trivial(const PathWord& p) {
  const PathWord r = britton_reduce(p);
  return r.edge_count() == 0 && r.elements().front().empty();
}

bool pi1_equal(const PathWord& p, const PathWord& q) {
  if (!p.is_loop() || !q.is_loop() || p.start() != q.start()) throw Error("pi1_equal: both paths must be loops at one base");
  return is_trivial(p * q.inverse());
}

int translation_length(const PathWord& p) {
  if (!p.is_loop()) throw Error("translation_length: not a loop");
  const PathWord r = britton_reduce(p);
  const auto& gog = *p.gog();
  // Cyclic word e_1 c_1 e_2 c_2 ... e_m c_m, c_i following e_i.
  std::vector<int> edges = r.edges();
  std::vector<Word> after(r.elements().begin() + 1, r.elements().end());
  if (edges.empty()) return 0;
  after.back() = after.back() * r.elements().front();
  while (edges.size() >= 2) {
    const int last = edges.back();
    if (edges.front() != GraphOfGroups::bar(last)) break;
    const auto k = power_of(after.back(), gog.alpha(last));
    if (!k) break;
    const Word x = gog.alpha(GraphOfGroups::bar(last)).pow(*k);
    if (edges.size() == 2) return 0;
    const Word merged = after[edges.size() - 2] * x * after.front();
    edges.erase(edges.begin());
    edges.pop_back();
    after.erase(after.begin());
    after.pop_back();
    after.back() = merged;
  }
  return static_cast<int>(edges.size());
}

PathWord parse_path(const GogPtr& gog, std::string_view text, std::optional<int> start) {
  struct Token {
    bool is_edge;
    int edge;
    std::string word;
  };
  std::vector<Token> tokens;
  std::size_t pos = 0;
  const std::string_view body = trim(text);
  while (pos < body.size()) {
    while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
    if (pos >= body.size()) break;
    if (body[pos] == '`') {
      const auto close = body.find('`', pos + 1);
      if (close == std::string_view::npos) throw ParseError("path: unterminated word");
      tokens.push_back({false, -1, std::string(body.substr(pos + 1, close - pos - 1))});
      pos = close + 1;
    } else {
      const auto star = body.find('*', pos);
      const auto name = trim(body.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
      if (name == "1") {
        tokens.push_back({false, -1, "1"});
      } else {
        const int e = gog->find_edge(name);
        if (e < 0) throw ParseError("path: unknown edge '" + std::string(name) + "'");
        tokens.push_back({true, e, {}});
      }
      pos = star == std::string_view::npos ? body.size() : star;
    }
    while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos;
    if (pos < body.size()) {
      if (body[pos] != '*') throw ParseError("path: expected '*'");
      ++pos;
    }
  }

  int vertex = -1;
  for (const auto& t : tokens) {
    if (t.is_edge) {
      vertex = gog->iota(t.edge);
      break;
    }
    const auto word = trim(t.word);
    if (word == "1") continue;
    const auto first = word.find_first_of("*^");
    const int v = gog->vertex_of_generator(trim(word.substr(0, first)));
    if (v < 0) throw ParseError("path: cannot place word '" + t.word + "' at a vertex");
    vertex = v;
    break;
  }
  if (vertex < 0) {
    if (!start) throw ParseError("path: start vertex cannot be inferred");
    vertex = *start;
  }
  if (start && *start != vertex) throw ParseError("path: does not start at the expected vertex");

  PathWord p(gog, vertex);
  for (const auto& t : tokens) {
    if (t.is_edge) {
      if (gog->iota(t.edge) != p.end()) throw ParseError("path: edge " + gog->edge(t.edge).name + " is not incident");
      p.push_edge(t.edge);
    } else {
      p.push_element(Word::parse(gog->vertex(p.end()).alphabet, t.word));
    }
  }
  return p;
}

}  // namespace freegog
