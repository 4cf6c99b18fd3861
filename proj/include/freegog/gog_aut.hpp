#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freegog/free_aut.hpp"
#include "freegog/gog.hpp"
#include "freegog/pi1.hpp"

namespace freegog {

/// Automorphism F of a graph of groups: graph permutation F, isomorphisms
/// f_v: G_v -> G_F(v), edge maps z_e -> z_F(e)^sign(e), and delta_e in the
/// group of F(tau(e)), subject to
///   f_tau(e)(alpha_e(z)) == delta_e^-1 alpha_F(e)(z)^sign(e) delta_e.
/// On the path group x -> f_v(x) and e -> delta_ebar^-1 F(e) delta_e.
struct GoGAut {
  GogPtr gog;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;   // directed edges
  std::vector<int> edge_sign;  // +1 or -1, equal on e and its reverse
  std::vector<FreeAut> vertex_isos;
  std::vector<Word> deltas;

  static GoGAut identity(GogPtr gog);

  /// Empty iff every invariant holds; one line per violation.
  std::vector<std::string> validate() const;
  void require_valid() const;
  bool graph_map_trivial() const;

  PathWord apply(const PathWord& p) const;
};

/// a then b.
GoGAut compose_gog(const GoGAut& a, const GoGAut& b);
GoGAut inverse(const GoGAut& a);
GoGAut power(const GoGAut& a, long k);

/// Twist exponents n_e per geometric edge; the twistor on e is z_e^{n_e}
/// and on its reverse z^{-n_e}.
struct DehnTwistData {
  GogPtr gog;
  std::vector<long> exponents;
};

/// Trivial graph and vertex maps, delta_e = alpha_e(z)^{n_e}, delta_ebar = 1.
GoGAut twist_gog_aut(const DehnTwistData& d);
FreeAut twist_aut(const DehnTwistData& d, const Pi1& pi1);
/// For an automorphism with trivial graph map, identity vertex isos and
/// every delta in its edge group: n_e = k_e - k_ebar where
/// delta_e = alpha_e(z)^{k_e}.  Otherwise nullopt.
std::optional<DehnTwistData> twist_exponents(const GoGAut& a);

/// The automorphism of pi_1(G, base) on the basis of pi1.  Requires F(base) == base.
FreeAut induced_aut(const GoGAut& a, const Pi1& pi1);
/// For a moved base: `connecting` runs from the base to F(base); loops map to
/// connecting * F(loop) * connecting^-1.
OuterAutClass induced_outer(const GoGAut& a, const Pi1& pi1, const PathWord& connecting);

/// (R^k)_* outer-equals the twist, and sign(e) n_e == n_F(e) on every edge.
bool is_root_of_dehn_twist(const GoGAut& r, const DehnTwistData& d, long k, const Pi1& pi1);

struct VertexRestriction {
  int period = 1;  // least t >= 1 with F^t(v) == v
  FreeAut restriction;  // (F^t)_v : G_v -> G_v
};
VertexRestriction vertex_power_restriction(const GoGAut& a, int v);

struct MuReport {
  std::vector<OuterAutClass> classes;
  std::vector<bool> trivial;
  /// alpha_e(z) for the edges ending at each vertex.
  std::vector<std::vector<Word>> families;
  std::vector<McCoolResult> mccool;
  bool in_mccool_product() const;
};

/// Per-vertex outer classes [f_v] for an automorphism with trivial graph map,
/// with McCool membership for the incident edge groups.  Optional
/// equivariance automorphisms are per vertex (nullopt entries skip).
MuReport mu(const GoGAut& a, const std::vector<std::optional<FreeAut>>& equivariant_wrt = {});

struct TwistRankCertificate {
  int rank = 0;
  int bound = 0;
  long pairs_checked = 0;
  /// Exponent vectors with outer-equal twists; empty for a valid certificate.
  std::vector<std::pair<std::vector<long>, std::vector<long>>> collisions;
  bool independent() const { return collisions.empty(); }
};

/// Rank = number of geometric edges, certified by pairwise outer inequality of
/// the twists with exponents in [-bound, bound].
TwistRankCertificate twist_kernel_rank(const GogPtr& gog, int bound = 2);

std::string format_gog_aut(const GoGAut& a);

}  // namespace freegog
