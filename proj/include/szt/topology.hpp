#pragma once

// Coarse wedge topology on constructor trees.
//
// Cantor-Bendixson iterates are tracked symbolically. Fix a base level x0 and
// let V0 = T^(x0). A node t of V0 with finitely many children is isolated in V0
// and gets height h(t) = 0. An infinitely branching t (a Blossom or selection
// node) has children whose ranks form a non-decreasing cofinal sequence in
// rank(t), and h(t) = -x0 + rank(t), the unique d with x0 + d = rank(t). The
// z-th CB derivative of V0 is then {t in V0 : h(t) >= z}.

#include "szt/fintree.hpp"
#include "szt/tree.hpp"

#include <string>
#include <vector>

namespace szt {

/// W(apex, excluded) = T[apex<=] minus the cones above the excluded children.
struct WedgeNbhd {
  NodeId apex;
  std::vector<NodeId> excluded;
};

/// Throws std::invalid_argument when an excluded node is not a child of the
/// apex, std::out_of_range for nodes outside T.
bool wedge_member(const TreeExpr& T, const WedgeNbhd& nb, const NodeId& x);

/// Parses `t=<path>;exclude=<path>,<path>,...` with paths like `[0,2]`.
WedgeNbhd parse_wedge(const std::string& text);
std::string to_string(const WedgeNbhd& nb);

/// The CB iterate of order `cb_level` of the derived tree T^(base_level).
class Subspace {
 public:
  Subspace(TreeExpr base, Ordinal base_level, Ordinal cb_level);

  static Subspace whole(const TreeExpr& T) { return Subspace(T, 0UL, 0UL); }
  static Subspace of_view(const DerivedView& v) { return Subspace(v.base(), v.level(), 0UL); }
  /// A subspace with no points.
  static Subspace empty_of(const TreeExpr& T);

  const TreeExpr& base() const { return base_; }
  const Ordinal& base_level() const { return base_level_; }
  const Ordinal& cb_level() const { return cb_level_; }

  bool contains(const NodeId& t) const;
  bool empty() const;
  bool downward_closed() const;
  std::string descriptor() const;

 private:
  TreeExpr base_;
  Ordinal base_level_;
  Ordinal cb_level_;
};

/// CB height of t in T^(base_level); t must lie in that derived tree.
Ordinal cb_height(const TreeExpr& T, const NodeId& t, const Ordinal& base_level);
/// Largest CB height over the cone T[t<=] intersected with T^(base_level).
Ordinal cb_reach(const TreeExpr& T, const NodeId& t, const Ordinal& base_level);

/// Throws std::invalid_argument when t is not in V.
bool is_isolated(const Subspace& V, const NodeId& t);

struct CbStep {
  Subspace result;
  bool downward_closed;
};
CbStep cb_derive(const Subspace& V);

Ordinal cb_rank(const TreeExpr& T);

/// True when the complement of S is the union of the cones T[t<=] over the
/// nodes t outside S, which certifies S closed. Holds for every downwards
/// closed S. `set` has one entry per node.
bool check_closed_downward(const FinTree& T, const std::vector<bool>& set);

struct ContinuityReport {
  bool continuous = true;
  std::string detail;
};
/// Checks that preimages of cones are empty or cones. Throws
/// std::invalid_argument when the image of phi is not downwards closed.
ContinuityReport check_embedding_continuity(const Embedding& phi, const TreeExpr& S, const TreeExpr& T);

struct CompactnessReport {
  bool chain_complete = true;
  bool min_finite = true;
  bool compact = true;
  std::string chain_reason;
  std::string min_reason;
};
CompactnessReport compactness_report(const TreeExpr& T);
CompactnessReport compactness_report(const Forest& F);
CompactnessReport compactness_report(const FinTree& T);

}  // namespace szt
