#pragma once

// Explicit finite trees given by parent arrays, plus the bridges between them
// and TreeExpr (truncation windows, canonical path codes, well-orders).

#include "szt/tree.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace szt {

/// Node bound for FinTree, read from SZT_MAX_NODES (default 4096).
std::size_t max_fin_nodes();

class FinTree {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  FinTree() : FinTree(std::vector<std::size_t>{npos}) {}
  /// parent[i] is the parent of node i, npos for the root. Validates a single
  /// root, acyclicity and the node bound.
  explicit FinTree(std::vector<std::size_t> parent);

  std::size_t size() const { return parent_.size(); }
  std::size_t root() const { return root_; }
  std::size_t parent(std::size_t i) const { return parent_.at(i); }
  const std::vector<std::size_t>& parents() const { return parent_; }
  /// Children in increasing index order.
  const std::vector<std::size_t>& children(std::size_t i) const { return children_.at(i); }
  std::size_t depth(std::size_t i) const { return depth_.at(i); }
  /// s is an ancestor of t or equal to it.
  bool leq(std::size_t s, std::size_t t) const;
  /// Ancestors of t from the root down to t itself.
  std::vector<std::size_t> chain_to(std::size_t t) const;

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> depth_;
  std::size_t root_ = 0;
};

/// Paths in the canonical numbering: children of each node are numbered
/// 0..k-1 in increasing index order.
std::vector<NodeId> omega_code(const FinTree& T);

TreeExpr to_expr(const FinTree& T);

/// A finite tree together with the TreeExpr path of every node.
struct PathTree {
  FinTree tree;
  std::vector<NodeId> paths;
};

/// Nodes in depth-first pre-order; throws std::invalid_argument for infinite
/// trees or trees over the node bound.
PathTree from_expr(const TreeExpr& T);

struct Truncation {
  FinTree tree;
  std::vector<NodeId> paths;
  std::vector<bool> elided;  // children were cut off below this node
};

/// Nodes of height <= depth whose path indices are all < width.
Truncation truncate(const TreeExpr& T, std::size_t depth, std::size_t width);

/// Block-decomposition well-order induced by psi; returns nodes in order.
std::vector<std::size_t> induced_wellorder(const FinTree& T, const std::vector<std::size_t>& psi);

/// DOT text for a truncation, each node labelled by its path and rank.
std::string to_dot(const TreeExpr& T, std::size_t depth, std::size_t width);

}  // namespace szt
