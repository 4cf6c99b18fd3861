#include "freegog/gog_aut.hpp"

#include <sstream>

#include "freegog/kernels.hpp"

namespace freegog {

GoGAut GoGAut::identity(GogPtr gog) {
  gog->require_free("graph-of-groups automorphism");
  GoGAut a;
  a.gog = gog;
  for (int v = 0; v < gog->vertex_count(); ++v) {
    a.vertex_map.push_back(v);
    a.vertex_isos.push_back(FreeAut::identity(gog->vertex(v).alphabet));
  }
  for (int e = 0; e < gog->directed_edge_count(); ++e) {
    a.edge_map.push_back(e);
    a.edge_sign.push_back(1);
    a.deltas.emplace_back(gog->vertex(gog->tau(e)).alphabet);
  }
  return a;
}

std::vector<std::string> GoGAut::validate() const {
  std::vector<std::string> out;
  if (!gog) return {"no graph of groups"};
  if (!gog->all_free()) return {"unsupported vertex group type"};
  const int nv = gog->vertex_count();
  const int ne = gog->directed_edge_count();
  if (static_cast<int>(vertex_map.size()) != nv || static_cast<int>(vertex_isos.size()) != nv ||
      static_cast<int>(edge_map.size()) != ne || static_cast<int>(edge_sign.size()) != ne ||
      static_cast<int>(deltas.size()) != ne) {
    return {"component sizes do not match the graph"};
  }
  std::vector<bool> hit_v(static_cast<std::size_t>(nv), false), hit_e(static_cast<std::size_t>(ne), false);
  for (int v = 0; v < nv; ++v) {
    if (vertex_map[v] < 0 || vertex_map[v] >= nv || hit_v[vertex_map[v]]) return {"vertex map is not a permutation"};
    hit_v[vertex_map[v]] = true;
  }
  for (int e = 0; e < ne; ++e) {
    if (edge_map[e] < 0 || edge_map[e] >= ne || hit_e[edge_map[e]]) return {"edge map is not a permutation"};
    hit_e[edge_map[e]] = true;
  }
  for (int e = 0; e < ne; ++e) {
    const auto& name = gog->edge(e).name;
    if (edge_map[GraphOfGroups::bar(e)] != GraphOfGroups::bar(edge_map[e])) {
      out.push_back("edge " + name + ": graph map does not commute with reversal");
    }
    if (gog->iota(edge_map[e]) != vertex_map[gog->iota(e)] || gog->tau(edge_map[e]) != vertex_map[gog->tau(e)]) {
      out.push_back("edge " + name + ": graph map does not respect incidence");
    }
    if ((edge_sign[e] != 1 && edge_sign[e] != -1) || edge_sign[e] != edge_sign[GraphOfGroups::bar(e)]) {
      out.push_back("edge " + name + ": bad edge-group sign");
    }
  }
  for (int v = 0; v < nv; ++v) {
    if (!same_alphabet(vertex_isos[v].source(), gog->vertex(v).alphabet) ||
        !same_alphabet(vertex_isos[v].target(), gog->vertex(vertex_map[v]).alphabet)) {
      out.push_back("vertex " + gog->vertex(v).name + ": isomorphism has the wrong source or target");
    }
  }
  for (int e = 0; e < ne; ++e) {
    if (!same_alphabet(deltas[e].alphabet(), gog->vertex(vertex_map[gog->tau(e)]).alphabet)) {
      out.push_back("edge " + gog->edge(e).name + ": delta lies in the wrong vertex group");
    }
  }
  if (!out.empty()) return out;
  for (int e = 0; e < ne; ++e) {
    const Word lhs = vertex_isos[gog->tau(e)].apply(gog->alpha(e));
    const Word rhs = conjugate(gog->alpha(edge_map[e]).pow(edge_sign[e]), deltas[e]);
    if (lhs != rhs) {
      out.push_back("edge " + gog->edge(e).name + ": f(alpha_e(z)) = " + lhs.str() +
                    " but delta^-1 alpha_F(e)(z) delta = " + rhs.str());
    }
  }
  return out;
}

void GoGAut::require_valid() const {
  const auto problems = validate();
  if (!problems.empty()) throw Error("invalid graph-of-groups automorphism: " + problems.front());
}

bool GoGAut::graph_map_trivial() const {
  for (int v = 0; v < static_cast<int>(vertex_map.size()); ++v) {
    if (vertex_map[v] != v) return false;
  }
  for (int e = 0; e < static_cast<int>(edge_map.size()); ++e) {
    if (edge_map[e] != e) return false;
  }
  return true;
}

PathWord GoGAut::apply(const PathWord& p) const {
  if (p.gog() != gog) throw Error("apply: path over another graph of groups");
  PathWord out(gog, vertex_map[p.start()]);
  out.push_element(vertex_isos[p.start()].apply(p.elements().front()));
  for (std::size_t i = 0; i < p.edges().size(); ++i) {
    const int e = p.edges()[i];
    out.push_element(deltas[GraphOfGroups::bar(e)].inverse());
    out.push_edge(edge_map[e]);
    out.push_element(deltas[e]);
    out.push_element(vertex_isos[gog->tau(e)].apply(p.elements()[i + 1]));
  }
  return out;
}

GoGAut compose_gog(const GoGAut& a, const GoGAut& b) {
  if (a.gog != b.gog) throw Error("compose_gog: different graphs of groups");
  GoGAut c;
  c.gog = a.gog;
  const auto& gog = *a.gog;
  for (int v = 0; v < gog.vertex_count(); ++v) {
    c.vertex_map.push_back(b.vertex_map[a.vertex_map[v]]);
    c.vertex_isos.push_back(compose(a.vertex_isos[v], b.vertex_isos[a.vertex_map[v]]));
  }
  for (int e = 0; e < gog.directed_edge_count(); ++e) {
    const int fe = a.edge_map[e];
    c.edge_map.push_back(b.edge_map[fe]);
    c.edge_sign.push_back(a.edge_sign[e] * b.edge_sign[fe]);
    c.deltas.push_back(b.deltas[fe] * b.vertex_isos[a.vertex_map[gog.tau(e)]].apply(a.deltas[e]));
  }
  return c;
}

GoGAut inverse(const GoGAut& a) {
  const auto& gog = *a.gog;
  GoGAut h = a;
  for (int v = 0; v < gog.vertex_count(); ++v) {
    h.vertex_map[a.vertex_map[v]] = v;
    h.vertex_isos[a.vertex_map[v]] = a.vertex_isos[v].inverse();
  }
  for (int e = 0; e < gog.directed_edge_count(); ++e) {
    const int fe = a.edge_map[e];
    h.edge_map[fe] = e;
    h.edge_sign[fe] = a.edge_sign[e];
    h.deltas[fe] = a.vertex_isos[gog.tau(e)].apply_inverse(a.deltas[e]).inverse();
  }
  return h;
}

GoGAut power(const GoGAut& a, long k) {
  const GoGAut base = k >= 0 ? a : inverse(a);
  GoGAut out = GoGAut::identity(a.gog);
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) out = compose_gog(out, base);
  return out;
}

GoGAut twist_gog_aut(const DehnTwistData& d) {
  if (static_cast<int>(d.exponents.size()) != d.gog->geometric_edge_count()) {
    throw Error("twist: one exponent per geometric edge is required");
  }
  GoGAut a = GoGAut::identity(d.gog);
  for (int k = 0; k < d.gog->geometric_edge_count(); ++k) a.deltas[2 * k] = d.gog->alpha(2 * k).pow(d.exponents[k]);
  return a;
}

FreeAut twist_aut(const DehnTwistData& d, const Pi1& pi1) { return induced_aut(twist_gog_aut(d), pi1); }

std::optional<DehnTwistData> twist_exponents(const GoGAut& a) {
  if (!a.graph_map_trivial()) return std::nullopt;
  const auto& gog = *a.gog;
  for (int v = 0; v < gog.vertex_count(); ++v) {
    if (a.vertex_isos[v] != FreeAut::identity(gog.vertex(v).alphabet)) return std::nullopt;
  }
  DehnTwistData d{a.gog, {}};
  for (int k = 0; k < gog.geometric_edge_count(); ++k) {
    if (a.edge_sign[2 * k] != 1) return std::nullopt;
    const auto forward = power_of(a.deltas[2 * k], gog.alpha(2 * k));
    const auto backward = power_of(a.deltas[2 * k + 1], gog.alpha(2 * k + 1));
    if (!forward || !backward) return std::nullopt;
    d.exponents.push_back(*forward - *backward);
  }
  return d;
}

FreeAut induced_aut(const GoGAut& a, const Pi1& pi1) {
  if (a.gog != pi1.gog()) throw Error("induced_aut: different graphs of groups");
  if (a.vertex_map[pi1.base()] != pi1.base()) {
    throw Error("induced_aut: the base vertex is moved; a connecting path is required");
  }
  const GoGAut h = inverse(a);
  const auto& basis = pi1.basis();
  std::vector<Word> forward, backward;
  for (int i = 0; i < basis->rank(); ++i) {
    const PathWord loop = pi1.basis_loop(i);
    forward.push_back(pi1.to_basis(a.apply(loop)));
    backward.push_back(pi1.to_basis(h.apply(loop)));
  }
  return FreeAut(basis, std::move(forward), std::move(backward));
}

OuterAutClass induced_outer(const GoGAut& a, const Pi1& pi1, const PathWord& connecting) {
  if (connecting.start() != pi1.base() || connecting.end() != a.vertex_map[pi1.base()]) {
    throw Error("induced_outer: connecting path must run from the base to its image");
  }
  const GoGAut h = inverse(a);
  const PathWord back = h.apply(connecting).inverse();
  const auto& basis = pi1.basis();
  std::vector<Word> forward, backward;
  for (int i = 0; i < basis->rank(); ++i) {
    const PathWord loop = pi1.basis_loop(i);
    forward.push_back(pi1.to_basis(connecting * a.apply(loop) * connecting.inverse()));
    backward.push_back(pi1.to_basis(back * h.apply(loop) * back.inverse()));
  }
  return OuterAutClass(FreeAut(basis, std::move(forward), std::move(backward)));
}

bool is_root_of_dehn_twist(const GoGAut& r, const DehnTwistData& d, long k, const Pi1& pi1) {
  if (k < 1) throw Error("is_root_of_dehn_twist: k must be positive");
  r.require_valid();
  const auto& gog = *r.gog;
  auto n = [&](int e) { return e % 2 == 0 ? d.exponents[e / 2] : -d.exponents[e / 2]; };
  for (int e = 0; e < gog.directed_edge_count(); ++e) {
    if (r.edge_sign[e] * n(e) != n(r.edge_map[e])) return false;
  }
  return outer_equal(induced_aut(power(r, k), pi1), twist_aut(d, pi1));
}

VertexRestriction vertex_power_restriction(const GoGAut& a, int v) {
  VertexRestriction out{1, a.vertex_isos[v]};
  for (int w = a.vertex_map[v]; w != v; w = a.vertex_map[w]) {
    out.restriction = compose(out.restriction, a.vertex_isos[w]);
    ++out.period;
  }
  return out;
}

bool MuReport::in_mccool_product() const {
  for (const auto& m : mccool) {
    if (!m.member) return false;
  }
  return true;
}

MuReport mu(const GoGAut& a, const std::vector<std::optional<FreeAut>>& equivariant_wrt) {
  a.require_valid();
  if (!a.graph_map_trivial()) throw Error("mu: the graph map is not the identity");
  const auto& gog = *a.gog;
  MuReport report;
  for (int v = 0; v < gog.vertex_count(); ++v) {
    const FreeAut& f = a.vertex_isos[v];
    std::vector<Word> family;
    for (int e = 0; e < gog.directed_edge_count(); ++e) {
      if (gog.tau(e) == v) family.push_back(gog.alpha(e));
    }
    std::optional<FreeAut> equivariance;
    if (v < static_cast<int>(equivariant_wrt.size())) equivariance = equivariant_wrt[v];
    if (f.source()->rank() >= 2) {
      report.trivial.push_back(is_inner(f).has_value());
      report.mccool.push_back(mccool_membership(f, family, equivariance));
    } else {
      // Out(Z) = {1, -1}: only the identity is inner.
      report.trivial.push_back(f == FreeAut::identity(f.source()));
      McCoolResult m;
      m.member = true;
      for (const auto& w : family) {
        const bool fixed = f.apply(w) == w;
        m.member = m.member && fixed;
        m.witnesses.push_back(fixed ? std::optional<Word>(Word(w.alphabet())) : std::nullopt);
      }
      report.mccool.push_back(std::move(m));
    }
    report.classes.emplace_back(f);
    report.families.push_back(std::move(family));
  }
  return report;
}

TwistRankCertificate twist_kernel_rank(const GogPtr& gog, int bound) {
  gog->require_free("twist_kernel_rank");
  if (!gog->efficient()) throw Error("twist_kernel_rank: graph of groups is not efficient");
  const Pi1 pi1(gog);
  return kernels::twist_independence_parallel(pi1, bound);
}

std::string format_gog_aut(const GoGAut& a) {
  const auto& gog = *a.gog;
  std::ostringstream out;
  for (int v = 0; v < gog.vertex_count(); ++v) {
    out << "map " << gog.vertex(v).name << " -> " << gog.vertex(a.vertex_map[v]).name << '\n';
  }
  for (int k = 0; k < gog.geometric_edge_count(); ++k) {
    out << "map " << gog.edge(2 * k).name << " -> " << gog.edge(a.edge_map[2 * k]).name;
    if (a.edge_sign[2 * k] < 0) out << " sign -1";
    out << '\n';
  }
  for (int v = 0; v < gog.vertex_count(); ++v) {
    const FreeAut& f = a.vertex_isos[v];
    out << "iso " << gog.vertex(v).name << ": ";
    for (int i = 0; i < f.source()->rank(); ++i) {
      out << (i ? ", " : "") << f.source()->name(i) << " -> " << f.image(i).str();
    }
    out << " | ";
    for (int i = 0; i < f.target()->rank(); ++i) {
      out << (i ? ", " : "") << f.target()->name(i) << " -> " << f.inverse_image(i).str();
    }
    out << '\n';
  }
  for (int e = 0; e < gog.directed_edge_count(); ++e) {
    out << "delta " << gog.edge(e).name << " = " << a.deltas[e].str() << '\n';
  }
  return out.str();
}

}  // namespace freegog
