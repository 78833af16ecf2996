#pragma once

// Symbolic Szlenk derivation on the point system g_t* of a tree: g_t* is the
// indicator of the ancestors of t other than the root, and g_root* = 0.
// Distinct points sit at sup-distance exactly 1 and carry the coarse wedge
// topology, so for eps < 1 one derivation removes the isolated points and for
// eps >= 1 it removes everything.

#include "szt/topology.hpp"
#include "szt/vectors.hpp"

#include <string>
#include <vector>

namespace szt {

struct DualModel {
  TreeExpr tree;
  Subspace survivors;
  /// Number of truncation points whose pairwise distances were checked.
  std::size_t separation_checked = 0;
};

/// g_t* as a finitely supported vector on the tree.
SuppVec model_point(const TreeExpr& T, const NodeId& t);

/// Checks pairwise sup-distances on the first `sample` nodes in breadth-first
/// order and throws std::logic_error if one differs from 1.
DualModel build_model(const TreeExpr& T, std::size_t sample = 20);
/// Forests have no root; always throws std::invalid_argument.
DualModel build_model(const Forest& F);

/// Throws std::invalid_argument for eps <= 0.
DualModel szlenk_derive(const DualModel& M, const Rational& eps);
Ordinal szlenk_index(const DualModel& M, const Rational& eps);

/// The xi-th survivor set for 0 < eps < 1.
Subspace level_set(const DualModel& M, const Rational& eps, const Ordinal& xi);

struct LevelCertificate {
  bool equal = true;
  std::size_t checked = 0;
  std::vector<NodeId> mismatches;
};
/// Compares level_set with derive(tree, xi) on a truncation window.
LevelCertificate level_set_certificate(const DualModel& M, const Rational& eps, const Ordinal& xi, std::size_t depth,
                                       std::size_t width);

struct TraceLevel {
  Ordinal xi;
  std::string survivors;
  std::vector<NodeId> removed_sample;
};
/// Survivor descriptors at the levels below `levels` where something changes
/// in a small window, plus the first few finite levels.
std::vector<TraceLevel> trace(const DualModel& M, const Rational& eps, const Ordinal& levels);

struct SpoIndexReport {
  Ordinal rho;
  Ordinal alpha;
  Ordinal rho_times_omega;
  Ordinal omega_alpha_plus_one;
  bool equal = false;
  bool rho_successor = false;
  bool rho_above_omega_alpha = false;
  Ordinal model_lower_bound;
};
/// Throws std::invalid_argument for finite trees and for trees with a finitely
/// branching internal root.
SpoIndexReport spoindex_check(const TreeExpr& T);

struct HalvingStep {
  Rational epsilon;
  Ordinal level;
};
HalvingStep halving_schedule(const Ordinal& zeta, const Rational& eps, unsigned long n);

}  // namespace szt
