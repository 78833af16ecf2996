#pragma once

// Rooted well-founded trees of height <= w, built from a small constructor
// algebra. Nodes are addressed by paths (sequences of child indices), so the
// tree order is the prefix order and the height of a node is its path length.
//
// A TreeExpr is an immutable handle; children of Blossom generators are
// produced on demand from fund_seq, and every node caches its rank.

#include "szt/ordinal.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace szt {

using NodeId = std::vector<std::size_t>;

std::string to_string(const NodeId& t);

class TreeExpr;
struct ChildGen;

class TreeExpr {
 public:
  /// The one-node tree.
  TreeExpr();

  static TreeExpr leaf() { return TreeExpr(); }
  static TreeExpr node(ChildGen gen);

  bool is_leaf() const;
  /// The child generator; throws std::logic_error on a leaf.
  const ChildGen& children() const;
  std::shared_ptr<const ChildGen> children_ptr() const;

  /// nullopt when the node has countably infinitely many children.
  std::optional<std::size_t> child_count() const;
  /// The k-th child; throws std::out_of_range past the end.
  TreeExpr child(std::size_t k) const;

  /// Rank of the root, i.e. rho_T(root).
  const Ordinal& root_rank() const;
  /// Number of nodes, or nullopt for infinite trees.
  std::optional<std::size_t> size() const;

  /// Subtree rooted at `path`; throws std::out_of_range for invalid paths.
  TreeExpr at(const NodeId& path) const;
  bool contains(const NodeId& path) const;

  /// Syntactic equality of the expressions.
  friend bool operator==(const TreeExpr& a, const TreeExpr& b);

 private:
  struct Rep;
  static const std::shared_ptr<const Rep>& leaf_rep();
  explicit TreeExpr(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

struct FiniteList {
  std::vector<TreeExpr> items;
};

struct BlossomGen {
  Ordinal xi;  // > 0
};

struct SubSelect {
  std::shared_ptr<const ChildGen> inner;
  std::size_t offset = 0;
  std::size_t stride = 1;
  // When set, every infinitely branching child is wrapped in the same
  // selection, so the selection applies at every level below.
  bool recursive = false;
};

struct ChildGen {
  enum class Kind { finite, blossom, subselect };
  Kind kind = Kind::finite;
  FiniteList finite;
  BlossomGen blossom;
  SubSelect subselect;

  static ChildGen of_items(std::vector<TreeExpr> items);
  static ChildGen of_blossom(const Ordinal& xi);
  static ChildGen of_subselect(std::shared_ptr<const ChildGen> inner, std::size_t offset, std::size_t stride,
                               bool recursive = false);

  std::optional<std::size_t> count() const;
  TreeExpr child(std::size_t k) const;
  /// sup of (rank(child) + 1) over all children.
  Ordinal rank() const;

  friend bool operator==(const ChildGen& a, const ChildGen& b);
};

/// A finite chain of n >= 1 nodes.
TreeExpr chain_tree(std::size_t n);

bool leq(const NodeId& s, const NodeId& t);
/// Validated forms: throw std::out_of_range if s or t is not a node of T.
bool leq(const TreeExpr& T, const NodeId& s, const NodeId& t);
std::size_t height(const NodeId& t);
std::size_t height(const TreeExpr& T, const NodeId& t);

TreeExpr blossom(const Ordinal& xi);

Ordinal rank_node(const TreeExpr& T, const NodeId& t);
Ordinal rank_tree(const TreeExpr& T);

/// The derived tree T^(level).
class DerivedView {
 public:
  DerivedView(TreeExpr base, Ordinal level) : base_(std::move(base)), level_(std::move(level)) {}
  const TreeExpr& base() const { return base_; }
  const Ordinal& level() const { return level_; }
  /// False for paths outside the base tree.
  bool contains(const NodeId& t) const;
  bool empty() const;

 private:
  TreeExpr base_;
  Ordinal level_;
};

DerivedView derive(const TreeExpr& T, const Ordinal& xi);
/// Throws std::invalid_argument when t is not in the view.
bool is_max(const TreeExpr& T, const DerivedView& view, const NodeId& t);

/// Breadth-first enumeration with child-index tie-breaking, truncated at
/// `budget` nodes. Throws std::invalid_argument for budget 0.
std::vector<NodeId> enumerate_compatible(const TreeExpr& T, std::size_t budget);

/// The root's children as a forest; component k is rooted at NodeId {k}.
class Forest {
 public:
  explicit Forest(TreeExpr base) : base_(std::move(base)) {}
  const TreeExpr& base() const { return base_; }
  std::optional<std::size_t> count() const;
  TreeExpr component(std::size_t k) const { return base_.child(k); }
  bool empty() const { return count() == std::optional<std::size_t>(0); }

 private:
  TreeExpr base_;
};

Forest star(const TreeExpr& T);

/// Embedding of a finite tree into another tree, keyed by source paths.
using Embedding = std::map<NodeId, NodeId>;

/// Greedy embedding of a finite S into blossom(xi).
Embedding embed(const TreeExpr& S, const Ordinal& xi);
/// Same strategy for an arbitrary target; throws when the greedy scan finds no
/// room below a finitely branching target node.
Embedding embed_into(const TreeExpr& S, const TreeExpr& target);

/// Applies SubSelect(offset, stride) at every Blossom node of T.
TreeExpr full_subtree(const TreeExpr& T, std::size_t offset, std::size_t stride);

}  // namespace szt
