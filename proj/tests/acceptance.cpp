// One line per acceptance criterion: PASS/FAIL, tolerance, runtime against its budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "freegog/gog_aut.hpp"
#include "freegog/random.hpp"
#include "freegog/report.hpp"
#include "freegog/section4.hpp"

using namespace freegog;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::string tolerance;
  double budget_seconds;
  std::function<Verdict()> run;
};

const Scenario& s4() {
  static const Scenario s = section4_scenario("a*b");
  return s;
}

/// Runs the named checks of `s` and folds them into one verdict.
Verdict checks(const Scenario& s, const std::vector<std::string>& names, const std::string& label = "") {
  RunOptions options;
  options.filter = names;
  options.timing = false;
  const auto report = run_scenario(s, options);
  Verdict v{report.ok() && report.results.size() >= names.size(), ""};
  std::size_t pass = report.count(CheckStatus::kPass);
  v.detail = (label.empty() ? "" : label + ": ") + std::to_string(pass) + "/" + std::to_string(report.results.size()) +
             " checks";
  for (const auto& r : report.results) {
    if (r.status != CheckStatus::kPass) v.detail += "; " + r.name + " " + to_string(r.status) + " (" + r.witness + ")";
  }
  return v;
}

Verdict both(Verdict a, const Verdict& b) {
  a.pass = a.pass && b.pass;
  a.detail += "; " + b.detail;
  return a;
}

Verdict phi2_reproduction() {
  Verdict v = checks(s4(), {"s4.phi2.table"}, "g = a*b");
  Sampler rng(0);
  const auto ab = Alphabet::make({"a", "b"});
  std::vector<std::string> gs;
  while (gs.size() < 5) {
    const auto g = rng.non_power(ab, 6);
    if (g.size() < 2 || g == Word::parse(ab, "a*b") || std::count(gs.begin(), gs.end(), g.str())) continue;
    gs.push_back(g.str());
  }
  for (const auto& g : gs) v = both(v, checks(section4_scenario(g), {"s4.phi2.table"}, "g = " + g));
  return v;
}

Verdict mu_and_mccool() {
  Verdict v = checks(s4(), {"s4.mu.Psi", "s4.mu.kernel_twists", "s4.mccool", "s4.Psi.commutes_phi",
                            "s4.PsiPrime.phi2_not_phi"});
  long twists = 0;
  bool trivial = true;
  for (long r = -3; r <= 3; ++r) {
    for (long t = -3; t <= 3; ++t) {
      const auto report = mu(twist_gog_aut({s4().gog, {r, t}}));
      for (bool b : report.trivial) trivial = trivial && b;
      ++twists;
    }
  }
  v.pass = v.pass && trivial;
  v.detail += "; mu trivial on " + std::to_string(twists) + " grid twists: " + (trivial ? "yes" : "no");
  return v;
}

Verdict fixed_points() {
  Verdict v = checks(s4(), {"s4.fix"});
  for (const auto& c : verify_fixed_claims(s4())) {
    v.pass = v.pass && c.pass() && c.maximality == "not verified (out of scope)";
    v.detail += "; " + c.name + " " + std::to_string(c.fixed_words) + " fixed words, " +
                std::to_string(c.outside.size()) + " outside, maximality " + c.maximality;
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "phi^2 reproduction (g = a*b and 5 random g)", "exact", 1, phi2_reproduction},
      {2, "D phi D^-1 table over r, s in -3..3", "exact", 5, [] { return checks(s4(), {"s4.DphiDinv.table"}); }},
      {3, "D commutes with phi iff r = s, with phi^2 always", "exact", 30,
       [] {
         return checks(s4(), {"s4.D.commute_phi", "s4.D.commute_phi2", "s4.sequence.phi", "s4.sequence.phi2"});
       }},
      {4, "R valid, induces phi, square root of D(1,1)", "exact", 5,
       [] { return checks(s4(), {"s4.R.valid", "s4.R.induces_phi", "s4.R2.dehn_twist"}); }},
      {5, "twist kernel rank 2 over [-2,2]^2", "exact", 30, [] { return checks(s4(), {"s4.D.rank2"}); }},
      {6, "mu and McCool groups", "exact", 10, mu_and_mccool},
      {7, "translation length invariance and tree-ball oracle", "exact", 60,
       [] { return checks(s4(), {"prop.translation.invariance", "prop.translation.tree_ball"}); }},
      {8, "fixed-subgroup claims", "exact (bounded search, length <= 6)", 60, fixed_points},
      {9, "inner oracle and extend_homomorphism suites", "100% agreement", 120,
       [] { return checks(s4(), {"prop.inner.oracle", "prop.extend_hom.example", "prop.extend_hom.random"}); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = v.pass && in_time;
    failed += !pass;
    std::printf("%s criterion %d: %s | tolerance %s | %.2f s (< %g s%s) | %s\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), c.tolerance.c_str(), seconds, c.budget_seconds, in_time ? "" : ", over budget",
                v.detail.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
