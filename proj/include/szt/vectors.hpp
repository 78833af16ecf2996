#pragma once

// Finitely supported exact vectors on tree nodes, the summing operator
// (Sigma_T w)(t) = sum of w(s) over s <= t, and the l1, sup and James tree
// norms.

#include "szt/rational.hpp"
#include "szt/tree.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace szt {

enum class VecNorm { l1, sup };

class SuppVec {
 public:
  explicit SuppVec(TreeExpr ambient) : ambient_(std::move(ambient)) {}
  static SuppVec unit(const TreeExpr& T, const NodeId& t, const Rational& scale = 1);

  const TreeExpr& ambient() const { return ambient_; }
  const std::map<NodeId, Rational>& entries() const { return entries_; }
  /// Throws std::out_of_range for nodes outside the ambient tree.
  void set(const NodeId& t, const Rational& value);
  Rational get(const NodeId& t) const;
  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  /// Entries at nodes s with t <= s.
  SuppVec restricted_to_cone(const NodeId& t) const;

  friend SuppVec operator+(const SuppVec& a, const SuppVec& b);
  friend SuppVec operator-(const SuppVec& a, const SuppVec& b);
  friend SuppVec operator*(const Rational& c, const SuppVec& v);
  friend bool operator==(const SuppVec& a, const SuppVec& b) { return a.entries_ == b.entries_; }

 private:
  TreeExpr ambient_;
  std::map<NodeId, Rational> entries_;
};

/// One piece of a step function: the wedge W(apex, excluded) carries `value`.
struct Region {
  NodeId apex;
  std::vector<NodeId> excluded;
  Rational value;
};

/// A function on tree nodes that is constant on the wedges cut out by a finite
/// downwards closed set D containing the root: every node takes the value of
/// its deepest ancestor in D.
class StepFn {
 public:
  /// `values` must be keyed by a downwards closed node set containing the root.
  StepFn(TreeExpr ambient, std::map<NodeId, Rational> values);
  static StepFn zero(const TreeExpr& T);

  const TreeExpr& ambient() const { return ambient_; }
  const std::map<NodeId, Rational>& closure_values() const { return values_; }
  Rational eval(const NodeId& t) const;
  /// The partition of the tree into wedges, one per node of D.
  std::vector<Region> regions() const;

  friend StepFn operator+(const StepFn& a, const StepFn& b);
  friend StepFn operator*(const Rational& c, const StepFn& f);
  /// Pointwise equality on the whole tree.
  friend bool operator==(const StepFn& a, const StepFn& b);

 private:
  TreeExpr ambient_;
  std::map<NodeId, Rational> values_;
};

Rational l1_norm(const SuppVec& v);
Rational sup_norm(const SuppVec& v);
Rational norm(const SuppVec& v, VecNorm n);

StepFn sigma_apply(const SuppVec& v);
/// The same map restricted to vectors supported away from the root; throws
/// std::invalid_argument when the root carries a value.
StepFn sigma0_apply(const SuppVec& v);
Rational sup_norm(const StepFn& f);

inline constexpr std::size_t kDefaultJamesSupport = 14;

struct JamesNorm {
  Rational squared;
  SqrtEnclosure value;
  /// An optimal family of disjoint interval traces (support nodes per trace).
  std::vector<std::vector<NodeId>> family;
};

/// Throws std::invalid_argument when the support exceeds max_support.
JamesNorm james_norm(const SuppVec& v, std::size_t max_support = kDefaultJamesSupport);

/// Interval traces on the support: [a,b] intersected with the support for
/// support nodes a <= b, as sets of support nodes.
std::vector<std::vector<NodeId>> interval_traces(const SuppVec& v);

struct ChainCheck {
  bool holds = false;
  Rational sup;
  Rational james_squared;
  Rational l1;
  Rational lower_gap;  // J^2 - sup^2
  Rational upper_gap;  // l1^2 - J^2
};
ChainCheck chain_inequality_check(const SuppVec& v);

bool eps_separated(const std::vector<SuppVec>& points, const Rational& eps, VecNorm n);
/// Step functions only carry the sup norm; other norms throw.
bool eps_separated(const std::vector<StepFn>& points, const Rational& eps, VecNorm n = VecNorm::sup);

bool delta_net_check(const std::vector<SuppVec>& candidates, const std::vector<SuppVec>& targets,
                     const Rational& delta, VecNorm n);

}  // namespace szt
