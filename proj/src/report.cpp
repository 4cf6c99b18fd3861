#include "freegog/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "freegog/folding.hpp"
#include "freegog/kernels.hpp"
#include "freegog/random.hpp"
#include "freegog/tree_ball.hpp"

namespace freegog {

namespace {

struct Outcome {
  bool pass = false;
  std::string witness;
  bool unsupported = false;
};

using CheckFn = std::function<Outcome(const Scenario&, Sampler&)>;

struct CheckDef {
  std::string name;
  std::string anchor;
  CheckFn run;
};

constexpr std::string_view kUnsupported = "unsupported vertex group type";

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string exponents_str(const std::vector<long>& n) {
  std::vector<std::string> parts;
  for (long x : n) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

std::string aut_inline(const FreeAut& f) {
  std::vector<std::string> parts;
  for (int i = 0; i < f.source()->rank(); ++i) parts.push_back(f.source()->name(i) + "->" + f.image(i).str());
  return join(parts, ", ");
}

// ---- object expressions: name[^k] joined by '*', read left to right ----

std::vector<std::pair<std::string, long>> factors(const std::string& expr) {
  std::vector<std::pair<std::string, long>> out;
  std::size_t begin = 0;
  while (begin <= expr.size()) {
    auto end = expr.find('*', begin);
    if (end == std::string::npos) end = expr.size();
    const auto token = expr.substr(begin, end - begin);
    const auto caret = token.find('^');
    if (caret == std::string::npos) {
      out.emplace_back(token, 1);
    } else {
      out.emplace_back(token.substr(0, caret), std::stol(token.substr(caret + 1)));
    }
    begin = end + 1;
  }
  return out;
}

FreeAut aut_expr(const Scenario& s, const std::string& expr) {
  std::optional<FreeAut> out;
  for (const auto& [name, k] : factors(expr)) {
    const auto f = power(s.resolve_aut(name), k);
    out = out ? compose(*out, f) : f;
  }
  return *out;
}

GoGAut gog_expr(const Scenario& s, const std::string& expr) {
  std::optional<GoGAut> out;
  for (const auto& [name, k] : factors(expr)) {
    const auto a = power(s.gogaut(name), k);
    out = out ? compose_gog(*out, a) : a;
  }
  return *out;
}

// ---- `check` lines ----

std::string kind_anchor(const std::string& kind) {
  static const std::map<std::string, std::string> anchors{
      {"valid", "f_tau(e)(alpha_e(z)) = delta_e^-1 alpha_F(e)(z)^sign delta_e"},
      {"equal", "(w)f == (w)g on every generator"},
      {"outer_equal", "[f] == [g] in Out"},
      {"inner", "f == Ad(h)"},
      {"commutes", "[f][g] == [g][f] in Out"},
      {"twist", "delta_e = alpha_e(g_e), z_e = delta_e delta_ebar^-1"},
      {"root", "R^k represents D, R_e(z_e) = z_R(e)"},
      {"fixes", "(w)f == w"},
      {"mu_trivial", "mu: Out_0 -> prod_v Out(G_v)"},
      {"twist_rank", "Dehn twists ~ prod_e Z(G_e)"},
      {"proper_power", "w == r^k, k >= 2"},
  };
  const auto it = anchors.find(kind);
  return it == anchors.end() ? kind : it->second;
}

Outcome run_line_check(const Scenario& s, const CheckSpec& c) {
  const auto& a = c.args;
  auto need = [&](std::size_t n) {
    if (a.size() < n) throw Error("check " + c.kind + ": expected at least " + std::to_string(n) + " arguments");
  };
  bool value = false;
  std::string witness;
  if (c.kind == "valid") {
    need(1);
    const auto problems = gog_expr(s, a[0]).validate();
    value = problems.empty();
    witness = value ? "all edge equations hold" : join(problems, "; ");
  } else if (c.kind == "equal" || c.kind == "outer_equal" || c.kind == "commutes") {
    need(2);
    const auto f = aut_expr(s, a[0]);
    const auto g = aut_expr(s, a[1]);
    value = c.kind == "equal" ? f == g : c.kind == "outer_equal" ? outer_equal(f, g) : outer_commutes(f, g);
    witness = a[0] + ": " + aut_inline(f);
  } else if (c.kind == "inner") {
    need(1);
    const auto h = is_inner(aut_expr(s, a[0]));
    value = h.has_value();
    witness = h ? "h = " + h->str() : "no conjugator";
  } else if (c.kind == "twist") {
    need(1);
    const auto d = twist_exponents(gog_expr(s, a[0]));
    if (a.size() == 1) {
      value = d.has_value();
    } else {
      std::vector<long> n;
      for (std::size_t i = 1; i < a.size(); ++i) n.push_back(std::stol(a[i]));
      value = d && d->exponents == n;
    }
    witness = d ? "exponents " + exponents_str(d->exponents) : "not a twist";
  } else if (c.kind == "root") {
    need(2);
    const long k = std::stol(a[1]);
    std::vector<long> n;
    for (std::size_t i = 2; i < a.size(); ++i) n.push_back(std::stol(a[i]));
    value = is_root_of_dehn_twist(gog_expr(s, a[0]), {s.gog, n}, k, s.fundamental_group());
    witness = "k = " + a[1] + ", twistors " + exponents_str(n);
  } else if (c.kind == "fixes") {
    need(2);
    const auto f = aut_expr(s, a[0]);
    const auto w = Word::parse(f.source(), a[1]);
    value = f.apply(w) == w;
    witness = "image " + f.apply(w).str();
  } else if (c.kind == "mu_trivial") {
    need(1);
    const auto report = mu(gog_expr(s, a[0]));
    value = std::all_of(report.trivial.begin(), report.trivial.end(), [](bool b) { return b; });
    std::vector<std::string> parts;
    for (int v = 0; v < s.gog->vertex_count(); ++v) {
      parts.push_back(s.gog->vertex(v).name + (report.trivial[v] ? ": inner" : ": outer"));
    }
    witness = join(parts, ", ");
  } else if (c.kind == "twist_rank") {
    need(1);
    const auto cert = twist_kernel_rank(s.gog);
    value = cert.independent() && cert.rank == std::stol(a[0]);
    witness = "rank " + std::to_string(cert.rank) + ", " + std::to_string(cert.pairs_checked) + " pairs, " +
              std::to_string(cert.collisions.size()) + " collisions";
  } else if (c.kind == "proper_power") {
    need(1);
    const auto p = is_proper_power(s.word(a[0]));
    value = p.has_value();
    witness = p ? p->root.str() + "^" + std::to_string(p->exponent) : "not a proper power";
  } else {
    throw Error("unknown check kind '" + c.kind + "'");
  }
  Outcome out;
  out.pass = value == c.expected;
  out.witness = witness + (out.pass ? "" : " (expected " + std::string(c.expected ? "true" : "false") + ")");
  return out;
}

std::string pad3(int n) {
  std::string s = std::to_string(n);
  return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

// ---- section4 suite ----

struct S4 {
  const Scenario& s;
  const Pi1& pi1;
  AlphabetPtr basis;
  Word g, gamma;

  explicit S4(const Scenario& scenario)
      : s(scenario), pi1(scenario.fundamental_group()), basis(pi1.basis()), g(s.param("g")), gamma(s.param("gamma")) {}

  Word x(int i) const { return Word::generator(basis, i); }
  FreeAut phi() const { return s.resolve_aut("phi"); }
  FreeAut twist(long r, long t) const { return twist_aut({s.gog, {r, t}}, pi1); }
  int vertex(const std::string& name) const { return s.gog->find_vertex(name); }
};

std::vector<std::string> table_mismatches(const FreeAut& f, const std::vector<Word>& expected) {
  std::vector<std::string> out;
  for (int i = 0; i < f.source()->rank(); ++i) {
    if (f.image(i) != expected[i]) {
      out.push_back(f.source()->name(i) + ": " + f.image(i).str() + " != " + expected[i].str());
    }
  }
  return out;
}

Outcome from_mismatches(const std::vector<std::string>& mismatches, std::string ok) {
  if (mismatches.empty()) return {true, std::move(ok)};
  return {false, join(mismatches, "; ")};
}

std::pair<long, long> grid_rs(const Scenario& s) {
  const auto r = s.grid("r", {-3, 3});
  const auto t = s.grid("s", {-3, 3});
  return {std::min(r.first, t.first), std::max(r.second, t.second)};
}

Outcome s4_mccool_vertex_side(const Scenario& s, const std::string& vname, const std::string& psi_name) {
  S4 c(s);
  const auto R = s.gogaut("R");
  const int v = c.vertex(vname);
  const auto restriction = vertex_power_restriction(R, v);
  const auto inner = is_inner(restriction.restriction);
  const auto psi = s.resolve_aut(psi_name);
  const auto family = std::vector<Word>{v == c.vertex("u") ? s.gog->alpha(s.gog->find_edge("~e_u"))
                                                            : s.gog->alpha(s.gog->find_edge("~e_w"))};
  const auto m = mccool_membership(psi, family, restriction.restriction);
  std::ostringstream w;
  w << "R^" << restriction.period << "_" << vname << " = Ad(" << (inner ? inner->str() : "?") << "); " << psi_name
    << " in MC: " << (m.member ? "yes" : "no") << ", commutes: " << (m.commutes && *m.commutes ? "yes" : "no");
  return {inner.has_value() && restriction.period == 2 && m.member && m.commutes && *m.commutes, w.str()};
}

std::vector<CheckDef> section4_checks() {
  std::vector<CheckDef> out;
  auto add = [&](std::string name, std::string anchor, CheckFn fn) {
    out.push_back({"s4." + std::move(name), std::move(anchor), std::move(fn)});
  };

  add("g.not_proper_power", "g, gamma = I(g) not proper powers", [](const Scenario& s, Sampler&) {
    S4 c(s);
    const bool ok = !is_proper_power(c.g) && !is_proper_power(c.gamma) && c.gamma == c.s.resolve_aut("phi").apply(c.g);
    return Outcome{ok, "g = " + c.g.str() + ", gamma = " + c.gamma.str()};
  });

  add("phi.automorphism", "phi: a -> alpha, b -> beta, alpha -> a^g, beta -> b^g", [](const Scenario& s, Sampler&) {
    S4 c(s);
    const auto phi = c.phi();
    auto m = table_mismatches(phi, {c.x(2), c.x(3), conjugate(c.x(0), c.g), conjugate(c.x(1), c.g)});
    if (compose(phi, phi.inverse()) != FreeAut::identity(c.basis)) m.push_back("inverse fails");
    return from_mismatches(m, aut_inline(phi));
  });

  add("phi2.table", "phi^2: a -> a^g, b -> b^g, alpha -> alpha^gamma, beta -> beta^gamma",
      [](const Scenario& s, Sampler&) {
        S4 c(s);
        const auto phi2 = compose(c.phi(), c.phi());
        return from_mismatches(table_mismatches(phi2, {conjugate(c.x(0), c.g), conjugate(c.x(1), c.g),
                                                       conjugate(c.x(2), c.gamma), conjugate(c.x(3), c.gamma)}),
                               aut_inline(phi2));
      });

  add("phi.not_twist", "Phi not a Dehn twist, Phi^2 a Dehn twist", [](const Scenario& s, Sampler&) {
    S4 c(s);
    const auto phi = c.phi();
    // [a] has period exactly 2 under Phi; twists fix every periodic class.
    const auto a1 = phi.apply(c.x(0));
    const auto a2 = phi.apply(a1);
    const bool period2 = !are_conjugate(c.x(0), a1) && are_conjugate(c.x(0), a2).has_value();
    std::vector<std::string> twins;
    const auto [lo, hi] = grid_rs(s);
    for (long r = lo; r <= hi; ++r) {
      for (long t = lo; t <= hi; ++t) {
        if (outer_equal(phi, c.twist(r, t))) twins.push_back(exponents_str({r, t}));
      }
    }
    const bool square = outer_equal(compose(phi, phi), c.twist(1, 1));
    return Outcome{period2 && twins.empty() && square,
                   "[a] -> [" + a1.str() + "] -> [" + a2.str() + "]; twists outer-equal to Phi: " +
                       std::to_string(twins.size()) + "; Phi^2 = D(1,1): " + (square ? "yes" : "no")};
  });

  add("gog.pi1", "pi_1(G) = G_u * G_w = F(a,b,alpha,beta)", [](const Scenario& s, Sampler&) {
    S4 c(s);
    const bool names = c.basis->names() == std::vector<std::string>{"a", "b", "alpha", "beta"};
    std::vector<std::string> loops;
    for (int i = 0; i < c.basis->rank(); ++i) loops.push_back(c.pi1.basis_loop(i).str());
    return Outcome{c.pi1.recognised_free() && names, "basis loops " + join(loops, ", ")};
  });

  add("R.valid", "delta_{e_u} = delta_{~e_u} = delta_{e_w} = 1, delta_{~e_w} = g^-1", [](const Scenario& s, Sampler&) {
    const auto& R = s.gogaut("R");
    const auto problems = R.validate();
    std::string deltas;
    for (int e = 0; e < s.gog->directed_edge_count(); ++e) {
      deltas += (e ? ", " : "") + s.gog->edge(e).name + " " + R.deltas[e].str();
    }
    return Outcome{problems.empty() && !R.graph_map_trivial(), problems.empty() ? "deltas " + deltas : join(problems, "; ")};
  });

  add("R.induces_phi", "R_* = phi on pi_1(G, v)", [](const Scenario& s, Sampler&) {
    S4 c(s);
    const auto induced = induced_aut(s.gogaut("R"), c.pi1);
    const bool exact = induced == c.phi();
    return Outcome{exact, std::string(exact ? "exact: " : "differs: ") + aut_inline(induced)};
  });

  add("R2.dehn_twist", "R^2 a Dehn twist with twistors g, gamma", [](const Scenario& s, Sampler&) {
    S4 c(s);
    const auto& R = s.gogaut("R");
    const auto R2 = compose_gog(R, R);
    const auto d = twist_exponents(R2);
    const bool root = is_root_of_dehn_twist(R, {s.gog, {1, 1}}, 2, c.pi1);
    std::string deltas;
    for (int e = 0; e < s.gog->directed_edge_count(); ++e) {
      deltas += (e ? ", " : "") + s.gog->edge(e).name + " " + R2.deltas[e].str();
    }
    const bool ok = d && d->exponents == std::vector<long>{1, 1} && root;
    return Outcome{ok, "R^2 deltas " + deltas + "; exponents " + (d ? exponents_str(d->exponents) : "none")};
  });

  add("mccool.u", "MC(G_u; <g>; R^2_u) = MC(G_u; <g>; 1)",
      [](const Scenario& s, Sampler&) { return s4_mccool_vertex_side(s, "u", "psi_u"); });
  add("mccool.w", "MC(G_w; <gamma>; R^2_w) = MC(G_w; <gamma>; 1)",
      [](const Scenario& s, Sampler&) { return s4_mccool_vertex_side(s, "w", "psi_w"); });

  add("mccool.v", "MC(G_v; {<g>, <gamma>}; R_v) = 1", [](const Scenario& s, Sampler& rng) {
    S4 c(s);
    const int v = c.vertex("v");
    const auto& alphabet = s.gog->vertex(v).alphabet;
    const Word x0 = Word::generator(alphabet, 0), x1 = Word::generator(alphabet, 1);
    long automorphisms = 0, samples = 0;
    std::vector<std::string> bad;
    // Every (x0^h0, x1^h1) that generates G_v preserves both classes; it must be inner.
    for (int i = 0; i < 400; ++i) {
      const auto h0 = rng.word_upto(alphabet, 3), h1 = rng.word_upto(alphabet, 3);
      const std::vector<Word> images{conjugate(x0, h0), conjugate(x1, h1)};
      ++samples;
      FoldedSubgroup image_group(images);
      if (!image_group.contains(x0).member || !image_group.contains(x1).member) continue;
      ++automorphisms;
      if (!inner_witness(alphabet, images)) bad.push_back(images[0].str() + ", " + images[1].str());
    }
    const auto R = s.gogaut("R");
    const bool rv_outer = !is_inner(R.vertex_isos[v]).has_value();
    return Outcome{bad.empty() && rv_outer,
                   std::to_string(samples) + " samples, " + std::to_string(automorphisms) +
                       " automorphisms, all inner: " + (bad.empty() ? "yes" : "no: " + join(bad, "; ")) +
                       "; R_v outer: " + (rv_outer ? "yes" : "no")};
  });

  add("mu.Psi", "mu(Psi) = ([psi_u], 1, [psi_w]) in MC(G_u;<g>) x MC(G_v;{<g>,<gamma>}) x MC(G_w;<gamma>)",
      [](const Scenario& s, Sampler&) {
        S4 c(s);
        const auto& R = s.gogaut("R");
        std::vector<std::optional<FreeAut>> eq;
        for (int v = 0; v < s.gog->vertex_count(); ++v) eq.push_back(vertex_power_restriction(R, v).restriction);
        const auto report = mu(s.gogaut("Psi"), eq);
        const int u = c.vertex("u"), v = c.vertex("v"), w = c.vertex("w");
        bool ok = !report.trivial[u] && report.trivial[v] && !report.trivial[w] && report.in_mccool_product();
        for (const auto& m : report.mccool) ok = ok && m.commutes && *m.commutes;
        std::vector<std::string> parts;
        for (int x = 0; x < s.gog->vertex_count(); ++x) {
          std::vector<std::string> fam;
          for (const auto& f : report.families[x]) fam.push_back(f.str());
          parts.push_back(s.gog->vertex(x).name + (report.trivial[x] ? " inner" : " outer") + " {" + join(fam, ",") +
                          "} " + (report.mccool[x].member ? "MC" : "not MC"));
        }
        return Outcome{ok, join(parts, "; ")};
      });

  add("Psi.commutes_phi", "Psi = psi_u * psi_w with psi_w = I psi_u I^-1 commutes with Phi", [](const Scenario& s, Sampler&) {
    S4 c(s);
    const auto psi = induced_aut(s.gogaut("Psi"), c.pi1);
    const bool ok = outer_commutes(psi, c.phi()) && !is_inner(psi);
    return Outcome{ok, "Psi_* " + aut_inline(psi)};
  });

  add("PsiPrime.phi2_not_phi", "psi_u, psi'_w not I-conjugate: commutes with Phi^2, not Phi",
      [](const Scenario& s, Sampler&) {
        S4 c(s);
        const auto psi = induced_aut(s.gogaut("PsiPrime"), c.pi1);
        const bool with_phi2 = outer_commutes(psi, compose(c.phi(), c.phi()));
        const bool with_phi = outer_commutes(psi, c.phi());
        return Outcome{with_phi2 && !with_phi, std::string("Phi^2: ") + (with_phi2 ? "commutes" : "no") +
                                                   ", Phi: " + (with_phi ? "commutes" : "no")};
      });

  add("D.table", "D: a -> a^{g^r}, b -> b^{g^r}, alpha -> alpha^{gamma^s}, beta -> beta^{gamma^s}",
      [](const Scenario& s, Sampler&) {
        S4 c(s);
        const auto [lo, hi] = grid_rs(s);
        std::vector<std::string> bad;
        long n = 0;
        for (long r = lo; r <= hi; ++r) {
          for (long t = lo; t <= hi; ++t) {
            ++n;
            const auto m = table_mismatches(c.twist(r, t), {conjugate(c.x(0), c.g.pow(r)), conjugate(c.x(1), c.g.pow(r)),
                                                            conjugate(c.x(2), c.gamma.pow(t)),
                                                            conjugate(c.x(3), c.gamma.pow(t))});
            if (!m.empty()) bad.push_back(exponents_str({r, t}) + " " + m.front());
          }
        }
        return from_mismatches(bad, std::to_string(n) + " grid points exact");
      });

  add("D.rank2", "{D(r,s)} free abelian of rank 2", [](const Scenario& s, Sampler&) {
    const auto cert = twist_kernel_rank(s.gog, 2);
    return Outcome{cert.rank == 2 && cert.independent(),
                   "rank " + std::to_string(cert.rank) + ", " + std::to_string(cert.pairs_checked) +
                       " pairs over [-2,2]^2, " + std::to_string(cert.collisions.size()) + " collisions"};
  });

  add("DphiDinv.table",
      "D phi D^-1: a -> alpha^{gamma^{r-s}}, b -> beta^{gamma^{r-s}}, alpha -> a^{g^{s-r+1}}, beta -> b^{g^{s-r+1}}",
      [](const Scenario& s, Sampler&) {
        S4 c(s);
        const auto [lo, hi] = grid_rs(s);
        const auto phi = c.phi();
        std::vector<std::string> bad;
        long n = 0;
        for (long r = lo; r <= hi; ++r) {
          for (long t = lo; t <= hi; ++t) {
            ++n;
            const auto d = c.twist(r, t);
            const auto m = table_mismatches(conjugate_aut(phi, d.inverse()),
                                            {conjugate(c.x(2), c.gamma.pow(r - t)), conjugate(c.x(3), c.gamma.pow(r - t)),
                                             conjugate(c.x(0), c.g.pow(t - r + 1)), conjugate(c.x(1), c.g.pow(t - r + 1))});
            if (!m.empty()) bad.push_back(exponents_str({r, t}) + " " + m.front());
          }
        }
        return from_mismatches(bad, std::to_string(n) + " grid points exact");
      });

  add("D.commute_phi", "D commutes with Phi iff r = s", [](const Scenario& s, Sampler&) {
    S4 c(s);
    const auto [lo, hi] = grid_rs(s);
    const auto phi = c.phi();
    std::vector<std::string> bad;
    long commuting = 0;
    for (long r = lo; r <= hi; ++r) {
      for (long t = lo; t <= hi; ++t) {
        const bool k = outer_commutes(c.twist(r, t), phi);
        commuting += k;
        if (k != (r == t)) bad.push_back(exponents_str({r, t}));
      }
    }
    return from_mismatches(bad, std::to_string(commuting) + " commuting grid points, all on r = s");
  });

  add("D.commute_phi2", "D commutes with Phi^2 for all r, s", [](const Scenario& s, Sampler&) {
    S4 c(s);
    const auto [lo, hi] = grid_rs(s);
    const auto phi2 = compose(c.phi(), c.phi());
    std::vector<std::string> bad;
    for (long r = lo; r <= hi; ++r) {
      for (long t = lo; t <= hi; ++t) {
        if (!outer_commutes(c.twist(r, t), phi2)) bad.push_back(exponents_str({r, t}));
      }
    }
    return from_mismatches(bad, "all grid points commute");
  });

  add("sequence.phi", "1 -> Z -> C_0(Phi) -> MC(G_u; {<g>}; 1) -> 1", [](const Scenario& s, Sampler&) {
    S4 c(s);
    const auto phi = c.phi();
    const auto [lo, hi] = grid_rs(s);
    // Kernel: twists commuting with Phi form the line r = s, generated by D(1,1).
    std::vector<std::vector<long>> kernel;
    for (long r = lo; r <= hi; ++r) {
      for (long t = lo; t <= hi; ++t) {
        if (outer_commutes(c.twist(r, t), phi)) kernel.push_back({r, t});
      }
    }
    bool ok = static_cast<long>(kernel.size()) == hi - lo + 1;
    for (const auto& k : kernel) ok = ok && k[0] == k[1];
    // Image: Psi lies in C_0(Phi) and maps to [psi_u], which is nontrivial.
    const auto& Psi = s.gogaut("Psi");
    const auto image = mu(Psi);
    ok = ok && Psi.graph_map_trivial() && outer_commutes(induced_aut(Psi, c.pi1), phi) && !image.trivial[c.vertex("u")];
    return Outcome{ok, "kernel points " + std::to_string(kernel.size()) + " on r = s; preimage Psi of [psi_u]"};
  });

  add("sequence.phi2",
      "1 -> Z^2 -> C_0(Phi^2) -> MC(G_u; {<g>}; 1) x MC(G_w; {<gamma>}; 1) -> 1", [](const Scenario& s, Sampler&) {
        S4 c(s);
        const auto phi2 = compose(c.phi(), c.phi());
        const auto [lo, hi] = grid_rs(s);
        bool ok = true;
        for (long r = lo; r <= hi; ++r) {
          for (long t = lo; t <= hi; ++t) ok = ok && outer_commutes(c.twist(r, t), phi2);
        }
        const auto cert = twist_kernel_rank(s.gog, 2);
        ok = ok && cert.rank == 2 && cert.independent();
        const auto& prime = s.gogaut("PsiPrime");
        const auto image = mu(prime);
        ok = ok && outer_commutes(induced_aut(prime, c.pi1), phi2) && !image.trivial[c.vertex("u")] &&
             image.trivial[c.vertex("w")];
        return Outcome{ok, "kernel rank " + std::to_string(cert.rank) + "; PsiPrime maps to ([psi_u], 1, 1)"};
      });

  add("C.index2", "C(Phi) = <C_0(Phi), Phi>", [](const Scenario& s, Sampler&) {
    S4 c(s);
    const auto& R = s.gogaut("R");
    const auto R2 = compose_gog(R, R);
    const auto phi = c.phi();
    const bool swaps = R.edge_map[s.gog->find_edge("e_u")] == s.gog->find_edge("e_w") && !R.graph_map_trivial();
    const bool ok = swaps && R2.graph_map_trivial() && outer_commutes(phi, compose(phi, phi)) &&
                    outer_commutes(induced_aut(s.gogaut("Psi"), c.pi1), phi);
    return Outcome{ok, "R swaps e_u, e_w; R^2 in the trivial-graph-map layer; index 2 itself not checked"};
  });

  add("mu.kernel_twists", "ker mu = Dehn twists", [](const Scenario& s, Sampler&) {
    S4 c(s);
    std::vector<std::pair<std::string, GoGAut>> corpus;
    const auto& R = s.gogaut("R");
    corpus.emplace_back("R^2", compose_gog(R, R));
    corpus.emplace_back("identity", GoGAut::identity(s.gog));
    for (const auto& [name, a] : s.gogauts) {
      if (a.graph_map_trivial()) corpus.emplace_back(name, a);
    }
    std::vector<std::string> parts;
    bool ok = true;
    for (const auto& [name, a] : corpus) {
      const auto report = mu(a);
      const bool trivial = std::all_of(report.trivial.begin(), report.trivial.end(), [](bool b) { return b; });
      const auto induced = induced_aut(a, c.pi1);
      std::optional<std::vector<long>> found;
      for (long r = -3; r <= 3 && !found; ++r) {
        for (long t = -3; t <= 3 && !found; ++t) {
          if (outer_equal(induced, c.twist(r, t))) found = std::vector<long>{r, t};
        }
      }
      ok = ok && trivial == found.has_value();
      parts.push_back(name + (trivial ? " trivial" : " nontrivial") + (found ? " twist " + exponents_str(*found) : ""));
    }
    return Outcome{ok, join(parts, "; ")};
  });

  for (const auto& [name, index] : std::vector<std::pair<std::string, int>>{
           {"fix.phi2_ad_ginv", 0}, {"fix.phi2", 1}, {"fix.phi2_ad_gammainv", 2}}) {
    static const char* const anchors[] = {"Fix phi^2 Ad(g^-1) = <a,b>", "Fix phi^2 = <g,gamma>",
                                          "Fix phi^2 Ad(gamma^-1) = <alpha,beta>"};
    add(name, anchors[index], [index](const Scenario& s, Sampler&) {
      const auto claims = verify_fixed_claims(s);
      const auto& claim = claims[static_cast<std::size_t>(index)];
      std::ostringstream w;
      w << "generators fixed: " << (claim.generators_fixed ? "yes" : "no") << "; " << claim.fixed_words
        << " fixed words of length <= " << claim.max_length << ", outside: " << claim.outside.size()
        << "; maximality: " << claim.maximality;
      return Outcome{claim.pass(), w.str()};
    });
  }
  return out;
}

// ---- generic property suite ----

std::vector<GoGAut> invariance_auts(const Scenario& s) {
  std::vector<GoGAut> auts;
  for (const auto& [name, a] : s.gogauts) {
    auts.push_back(a);
    auts.push_back(compose_gog(a, a));
  }
  const auto r = s.grid("r", {-3, 3});
  const auto t = s.grid("s", {-3, 3});
  const int edges = s.gog->geometric_edge_count();
  if (edges == 2) {
    for (long i = r.first; i <= r.second; ++i) {
      for (long j = t.first; j <= t.second; ++j) auts.push_back(twist_gog_aut({s.gog, {i, j}}));
    }
  } else {
    for (int e = 0; e < edges; ++e) {
      for (long i = r.first; i <= r.second; ++i) {
        std::vector<long> n(static_cast<std::size_t>(edges), 0);
        n[static_cast<std::size_t>(e)] = i;
        auts.push_back(twist_gog_aut({s.gog, n}));
      }
    }
  }
  return auts;
}

std::vector<PathWord> random_loops(const Scenario& s, Sampler& rng, int count, int max_edges, int max_element) {
  std::vector<PathWord> loops;
  for (int i = 0; i < count; ++i) loops.push_back(rng.loop(s.gog, s.gog->base(), max_edges, max_element));
  return loops;
}

template <typename Target>
std::vector<std::string> triangle_failures(const Pi1& pi1, const Target& target,
                                           const std::vector<typename Target::Value>& on_basis,
                                           const std::vector<PathWord>& loops) {
  const auto hom = extend_homomorphism(pi1, target, rho_from_basis(pi1, target, on_basis));
  auto failures = hom.relation_failures();
  auto via_basis = [&](const PathWord& loop) {
    auto value = target.identity();
    const Word w = pi1.to_basis(loop);
    for (Letter l : w.letters()) {
      const auto& x = on_basis[letter_generator(l)];
      value = target.multiply(value, l > 0 ? x : target.inverse(x));
    }
    return value;
  };
  for (const auto& loop : loops) {
    const auto lhs = hom.evaluate(loop);
    const auto rhs = via_basis(loop);
    if (!target.equal(lhs, rhs)) failures.push_back(loop.str() + ": " + target.str(lhs) + " != " + target.str(rhs));
  }
  return failures;
}

std::vector<PathWord> standard_loops(const Pi1& pi1) {
  std::vector<PathWord> loops;
  for (int i = 0; i < pi1.presentation_alphabet()->rank(); ++i) loops.push_back(pi1.presentation_loop(i));
  for (int i = 0; i < pi1.basis()->rank(); ++i) loops.push_back(pi1.basis_loop(i));
  return loops;
}

std::vector<std::string> extend_hom_failures(const Pi1& pi1, Sampler& rng, int random_loop_count) {
  auto loops = standard_loops(pi1);
  for (int i = 0; i < random_loop_count; ++i) loops.push_back(rng.loop(pi1.gog(), pi1.base(), 8, 3));
  const int n = pi1.basis()->rank();
  AbelianTarget z{n};
  std::vector<AbelianTarget::Value> units;
  for (int i = 0; i < n; ++i) {
    auto v = z.identity();
    v[static_cast<std::size_t>(i)] = i + 1;
    units.push_back(v);
  }
  auto failures = triangle_failures(pi1, z, units, loops);
  // A random free quotient: basis letters to random words in a rank-2 group.
  FreeTarget f{Alphabet::make({"p", "q"})};
  std::vector<Word> images;
  for (int i = 0; i < n; ++i) images.push_back(rng.word(f.alphabet, rng.uniform(1, 3)));
  auto more = triangle_failures(pi1, f, images, loops);
  failures.insert(failures.end(), more.begin(), more.end());
  return failures;
}

std::vector<std::vector<Word>> inner_samples(Sampler& rng, const AlphabetPtr& alphabet, int count, int max_image) {
  std::vector<std::vector<Word>> samples;
  while (static_cast<int>(samples.size()) < count) {
    std::vector<Word> images;
    const int mode = static_cast<int>(samples.size()) % 3;
    if (mode == 0) {
      // Inner, possibly with a long conjugator that cancels in the images.
      const auto h = rng.word_upto(alphabet, 3);
      for (int i = 0; i < alphabet->rank(); ++i) images.push_back(conjugate(Word::generator(alphabet, i), h));
    } else if (mode == 1) {
      // Near miss: an inner automorphism with one image perturbed.
      const auto h = rng.word_upto(alphabet, 2);
      for (int i = 0; i < alphabet->rank(); ++i) images.push_back(conjugate(Word::generator(alphabet, i), h));
      const int i = rng.uniform(0, alphabet->rank() - 1);
      images[static_cast<std::size_t>(i)] = images[static_cast<std::size_t>(i)] * rng.word(alphabet, 1);
    } else {
      for (int i = 0; i < alphabet->rank(); ++i) images.push_back(rng.word_upto(alphabet, max_image));
    }
    bool fits = true;
    for (const auto& w : images) fits = fits && static_cast<int>(w.size()) <= max_image;
    if (fits) samples.push_back(std::move(images));
  }
  return samples;
}

std::vector<CheckDef> generic_checks() {
  std::vector<CheckDef> out;
  auto add = [&](std::string name, std::string anchor, CheckFn fn) {
    out.push_back({"prop." + std::move(name), std::move(anchor), std::move(fn)});
  };

  add("translation.invariance", "||g Phi||_T = ||g||_T", [](const Scenario& s, Sampler& rng) {
    const auto auts = invariance_auts(s);
    const auto loops = random_loops(s, rng, 200, 12, 3);
    const auto failures = kernels::translation_invariance_parallel(auts, loops);
    std::ostringstream w;
    w << auts.size() << " automorphisms x " << loops.size() << " loops, " << failures.size() << " changes";
    if (!failures.empty()) {
      const auto& f = failures.front();
      w << "; first: loop " << loops[f.loop].str() << " " << f.before << " -> " << f.after;
    }
    return Outcome{failures.empty(), w.str()};
  });

  add("translation.tree_ball", "||g||_T = inf_{x in T} d_T(x, xg)", [](const Scenario& s, Sampler& rng) {
    const TreeBall ball(s.gog, s.gog->base(), 6, 1);
    std::vector<PathWord> loops;
    for (int tries = 0; tries < 20000 && loops.size() < 50; ++tries) {
      auto p = rng.loop(s.gog, s.gog->base(), 6, 1);
      if (ball.fits(p)) loops.push_back(std::move(p));
    }
    const auto oracle = kernels::ball_min_displacement_parallel(ball, loops);
    long nonzero = 0;
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < loops.size(); ++i) {
      const int tl = translation_length(loops[i]);
      nonzero += tl > 0;
      if (tl != oracle[i]) bad.push_back(loops[i].str() + ": " + std::to_string(tl) + " vs " + std::to_string(oracle[i]));
    }
    std::ostringstream w;
    w << "ball " << ball.vertex_count() << " vertices, tree: " << (ball.is_tree() ? "yes" : "no") << "; " << loops.size()
      << " fitting loops, " << nonzero << " hyperbolic";
    if (!bad.empty()) w << "; mismatches: " << join(bad, "; ");
    return Outcome{bad.empty() && ball.is_tree() && loops.size() == 50, w.str()};
  });

  add("translation.conjugacy", "||h^-1 g h||_T = ||g||_T", [](const Scenario& s, Sampler& rng) {
    std::vector<std::string> bad;
    for (int i = 0; i < 200; ++i) {
      const auto p = rng.loop(s.gog, s.gog->base(), 8, 3);
      const auto q = rng.loop(s.gog, s.gog->base(), 6, 3);
      if (translation_length(p) != translation_length(q.inverse() * p * q)) bad.push_back(p.str());
    }
    return from_mismatches(bad, "200 conjugate pairs agree");
  });

  add("translation.power", "||g^k||_T = |k| ||g||_T", [](const Scenario& s, Sampler& rng) {
    std::vector<std::string> bad;
    for (int i = 0; i < 200; ++i) {
      const auto p = rng.loop(s.gog, s.gog->base(), 8, 3);
      const int k = rng.uniform(-4, 4);
      if (translation_length(p.pow(k)) != std::abs(k) * translation_length(p)) bad.push_back(p.str());
    }
    return from_mismatches(bad, "200 powers agree");
  });

  add("britton.confluence", "e alpha_e(z) ebar = alpha_ebar(z)", [](const Scenario& s, Sampler& rng) {
    const auto& pi1 = s.fundamental_group();
    std::vector<std::string> bad;
    for (int i = 0; i < 200; ++i) {
      const auto p = rng.loop(s.gog, s.gog->base(), 8, 3);
      const auto q = rng.loop(s.gog, s.gog->base(), 8, 3);
      const auto rp = britton_reduce(p);
      if (!is_britton_reduced(rp) || !(britton_reduce(rp) == rp)) bad.push_back("not idempotent: " + p.str());
      if (pi1.to_basis(rp) != pi1.to_basis(p)) bad.push_back("basis image moved: " + p.str());
      if (!is_trivial(p * p.inverse())) bad.push_back("p p^-1 nontrivial: " + p.str());
      const auto pq = britton_reduce(p * q);
      const auto split = britton_reduce(rp * britton_reduce(q));
      if (!pi1_equal(pq, split)) bad.push_back("order dependence: " + p.str() + " | " + q.str());
      if (is_trivial(p) != pi1.to_basis(p).empty()) bad.push_back("triviality disagrees: " + p.str());
    }
    return from_mismatches(bad, "200 loop pairs reduce consistently");
  });

  add("extend_hom.example", "rho-hat(e) = rho(sigma_iota(e) e sigma_tau(e)^-1)", [](const Scenario& s, Sampler& rng) {
    const auto failures = extend_hom_failures(s.fundamental_group(), rng, 100);
    return from_mismatches(failures, "relations killed, triangle commutes on Z^n and free targets");
  });

  add("extend_hom.random", "rho-hat(e) = rho(sigma_iota(e) e sigma_tau(e)^-1)", [](const Scenario&, Sampler& rng) {
    std::vector<std::string> failures;
    long loops = 0;
    for (int i = 0; i < 10; ++i) {
      const auto gog = rng.three_vertex_gog(i);
      const Pi1 pi1(gog);
      if (!pi1.recognised_free()) {
        failures.push_back("graph " + std::to_string(i) + " not recognised free");
        continue;
      }
      auto f = extend_hom_failures(pi1, rng, 30);
      loops += 30;
      for (auto& x : f) failures.push_back("graph " + std::to_string(i) + ": " + x);
    }
    return from_mismatches(failures, "10 graphs, " + std::to_string(loops) + " random loops");
  });

  add("inner.oracle", "Ad(x): y -> x^-1 y x", [](const Scenario&, Sampler& rng) {
    const auto alphabet = Alphabet::make({"x", "y"});
    const auto samples = inner_samples(rng, alphabet, 500, 4);
    long inner = 0;
    for (const auto& s : samples) inner += inner_witness(alphabet, s).has_value();
    const auto bad = kernels::inner_oracle_disagreements_parallel(alphabet, samples, 5);
    std::ostringstream w;
    w << samples.size() << " samples, " << inner << " inner, " << bad.size() << " disagreements";
    return Outcome{bad.empty(), w.str()};
  });
  return out;
}

std::vector<CheckDef> all_checks(const Scenario& s) {
  std::vector<CheckDef> defs;
  for (const auto& c : s.checks) {
    std::string name = "line" + pad3(c.line) + "." + c.kind;
    for (const auto& a : c.args) name += "." + a;
    defs.push_back({name, kind_anchor(c.kind), [c](const Scenario& sc, Sampler&) { return run_line_check(sc, c); }});
  }
  for (const auto& suite : s.suites) {
    std::vector<CheckDef> more;
    if (suite == "section4") {
      more = section4_checks();
    } else if (suite == "generic") {
      more = generic_checks();
    } else {
      throw Error("unknown suite '" + suite + "'");
    }
    for (auto& d : more) defs.push_back(std::move(d));
  }
  std::sort(defs.begin(), defs.end(), [](const CheckDef& a, const CheckDef& b) { return a.name < b.name; });
  return defs;
}

bool selected(const std::string& name, const std::optional<std::vector<std::string>>& filter) {
  if (!filter) return true;
  for (const auto& f : *filter) {
    if (name == f || (name.size() > f.size() && name.compare(0, f.size(), f) == 0 &&
                      (f.back() == '.' || name[f.size()] == '.'))) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kUnsupported: return "unsupported";
  }
  return "fail";
}

bool Report::ok() const { return count(CheckStatus::kFail) == 0; }

std::size_t Report::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [&](const CheckResult& r) { return r.status == status; }));
}

std::vector<std::string> check_names(const Scenario& scenario) {
  std::vector<std::string> names;
  for (const auto& d : all_checks(scenario)) names.push_back(d.name);
  return names;
}

Report run_scenario(const Scenario& scenario, const RunOptions& options) {
  std::vector<CheckDef> defs;
  for (auto& d : all_checks(scenario)) {
    if (selected(d.name, options.filter)) defs.push_back(std::move(d));
  }
  Report report;
  report.scenario = scenario.name;
  report.results.resize(defs.size());
  const bool free = scenario.gog->all_free();
  const auto n = static_cast<long>(defs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    auto& r = report.results[static_cast<std::size_t>(i)];
    const auto& d = defs[static_cast<std::size_t>(i)];
    r.name = d.name;
    r.anchor = d.anchor;
    if (!free) {
      r.status = CheckStatus::kUnsupported;
      r.witness = std::string(kUnsupported);
      continue;
    }
    Sampler rng(options.seed);
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto outcome = d.run(scenario, rng);
      r.status = outcome.pass ? CheckStatus::kPass : CheckStatus::kFail;
      r.witness = outcome.witness;
    } catch (const std::exception& err) {
      const std::string what = err.what();
      r.status = what.find(kUnsupported) != std::string::npos ? CheckStatus::kUnsupported : CheckStatus::kFail;
      r.witness = "error: " + what;
    }
    if (options.timing) {
      r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  }
  return report;
}

std::string format_text(const Report& report) {
  std::ostringstream out;
  out << "scenario " << report.scenario << '\n';
  for (const auto& r : report.results) {
    out << to_string(r.status) << "  " << r.name;
    if (r.millis > 0) out << "  (" << static_cast<long>(r.millis + 0.5) << " ms)";
    out << "\n    " << r.anchor << "\n    " << r.witness << '\n';
  }
  out << report.count(CheckStatus::kPass) << " passed, " << report.count(CheckStatus::kFail) << " failed, "
      << report.count(CheckStatus::kUnsupported) << " unsupported\n";
  return out.str();
}

std::string format_jsonl(const Report& report) {
  std::string out;
  for (const auto& r : report.results) {
    nlohmann::ordered_json j;
    j["scenario"] = report.scenario;
    j["name"] = r.name;
    j["anchor"] = r.anchor;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness;
    j["millis"] = static_cast<long>(r.millis + 0.5);
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<FixClaim> verify_fixed_claims(const Scenario& scenario, int max_length) {
  const auto& pi1 = scenario.fundamental_group();
  const auto basis = pi1.basis();
  const Word g = scenario.param("g");
  const Word gamma = scenario.param("gamma");
  const auto phi = scenario.resolve_aut("phi");
  const auto phi2 = compose(phi, phi);
  auto gen = [&](const std::string& name) { return Word::parse(basis, name); };
  struct Spec {
    std::string name, automorphism;
    FreeAut f;
    std::vector<Word> generators;
  };
  const std::vector<Spec> specs{
      {"Fix phi^2 Ad(g^-1) = <a,b>", "phi^2 Ad(g^-1)", compose(phi2, FreeAut::inner(g.inverse())), {gen("a"), gen("b")}},
      {"Fix phi^2 = <g,gamma>", "phi^2", phi2, {g, gamma}},
      {"Fix phi^2 Ad(gamma^-1) = <alpha,beta>", "phi^2 Ad(gamma^-1)", compose(phi2, FreeAut::inner(gamma.inverse())),
       {gen("alpha"), gen("beta")}},
  };
  std::vector<FixClaim> claims;
  for (const auto& spec : specs) {
    FixClaim claim;
    claim.name = spec.name;
    claim.automorphism = spec.automorphism;
    claim.max_length = max_length;
    claim.generators_fixed = true;
    for (const auto& w : spec.generators) {
      claim.generators.push_back(w.str());
      claim.generators_fixed = claim.generators_fixed && spec.f.apply(w) == w;
    }
    const FoldedSubgroup subgroup(spec.generators);
    const auto fixed = kernels::fixed_words_parallel(spec.f, max_length);
    claim.fixed_words = static_cast<long>(fixed.size());
    for (const auto& w : fixed) {
      if (!subgroup.contains(w).member) claim.outside.push_back(w.str());
    }
    claims.push_back(std::move(claim));
  }
  return claims;
}

std::string format_fix_claims(const std::vector<FixClaim>& claims) {
  std::ostringstream out;
  for (const auto& c : claims) {
    out << (c.pass() ? "pass" : "fail") << "  " << c.name << '\n'
        << "    generators " << join(c.generators, ", ") << " fixed by " << c.automorphism << ": "
        << (c.generators_fixed ? "yes" : "no") << '\n'
        << "    " << c.fixed_words << " fixed words of length <= " << c.max_length << ", " << c.outside.size()
        << " outside the subgroup\n"
        << "    maximality: " << c.maximality << '\n';
    for (const auto& w : c.outside) out << "    outside: " << w << '\n';
  }
  return out.str();
}

}  // namespace freegog
