#include "szt/fintree.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace szt {

std::size_t max_fin_nodes() {
  if (const char* env = std::getenv("SZT_MAX_NODES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

FinTree::FinTree(std::vector<std::size_t> parent) : parent_(std::move(parent)) {
  const std::size_t n = parent_.size();
  if (n == 0) throw std::invalid_argument("FinTree needs at least one node");
  if (n > max_fin_nodes())
    throw std::invalid_argument("FinTree of " + std::to_string(n) + " nodes exceeds the bound " +
                                std::to_string(max_fin_nodes()));
  children_.assign(n, {});
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (parent_[i] == npos) {
      ++roots;
      root_ = i;
    } else if (parent_[i] >= n) {
      throw std::invalid_argument("FinTree: parent of node " + std::to_string(i) + " out of range");
    } else {
      children_[parent_[i]].push_back(i);
    }
  }
  if (roots != 1) throw std::invalid_argument("FinTree needs exactly one root, found " + std::to_string(roots));
  depth_.assign(n, 0);
  std::size_t reached = 0;
  std::deque<std::size_t> queue{root_};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    ++reached;
    for (std::size_t c : children_[v]) {
      depth_[c] = depth_[v] + 1;
      queue.push_back(c);
    }
  }
  if (reached != n) throw std::invalid_argument("FinTree: parent map has a cycle or unreachable nodes");
}

bool FinTree::leq(std::size_t s, std::size_t t) const {
  if (s >= size() || t >= size()) throw std::out_of_range("FinTree node index out of range");
  while (depth_[t] > depth_[s]) t = parent_[t];
  return s == t;
}

std::vector<std::size_t> FinTree::chain_to(std::size_t t) const {
  std::vector<std::size_t> out;
  for (std::size_t v = t; v != npos; v = parent_.at(v)) out.push_back(v);
  return {out.rbegin(), out.rend()};
}

std::vector<NodeId> omega_code(const FinTree& T) {
  std::vector<NodeId> code(T.size());
  std::deque<std::size_t> queue{T.root()};
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    const auto& kids = T.children(v);
    for (std::size_t k = 0; k < kids.size(); ++k) {
      code[kids[k]] = code[v];
      code[kids[k]].push_back(k);
      queue.push_back(kids[k]);
    }
  }
  return code;
}

TreeExpr to_expr(const FinTree& T) {
  // Deepest nodes first, so children are built before parents.
  std::vector<std::size_t> order(T.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return T.depth(a) > T.depth(b); });
  std::vector<TreeExpr> built(T.size());
  for (std::size_t v : order) {
    const auto& kids = T.children(v);
    if (kids.empty()) continue;
    std::vector<TreeExpr> items;
    for (std::size_t c : kids) items.push_back(built[c]);
    built[v] = TreeExpr::node(ChildGen::of_items(std::move(items)));
  }
  return built[T.root()];
}

PathTree from_expr(const TreeExpr& T) {
  auto n = T.size();
  if (!n) throw std::invalid_argument("from_expr: tree is infinite");
  if (*n > max_fin_nodes())
    throw std::invalid_argument("from_expr: " + std::to_string(*n) + " nodes exceed the bound " +
                                std::to_string(max_fin_nodes()));
  std::vector<std::size_t> parent;
  std::vector<NodeId> paths;
  struct Item {
    TreeExpr node;
    NodeId path;
    std::size_t parent;
  };
  std::vector<Item> stack{{T, NodeId{}, FinTree::npos}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    const std::size_t id = parent.size();
    parent.push_back(it.parent);
    paths.push_back(it.path);
    const std::size_t k = *it.node.child_count();
    for (std::size_t j = k; j-- > 0;) {
      NodeId p = it.path;
      p.push_back(j);
      stack.push_back({it.node.child(j), std::move(p), id});
    }
  }
  return {FinTree(std::move(parent)), std::move(paths)};
}

Truncation truncate(const TreeExpr& T, std::size_t depth, std::size_t width) {
  std::vector<std::size_t> parent{FinTree::npos};
  std::vector<NodeId> paths{NodeId{}};
  std::vector<bool> elided;
  std::deque<std::pair<std::size_t, TreeExpr>> queue{{0, T}};
  elided.push_back(false);
  const std::size_t bound = max_fin_nodes();
  while (!queue.empty()) {
    auto [id, node] = queue.front();
    queue.pop_front();
    auto n = node.child_count();
    const bool has_children = !n || *n > 0;
    if (paths[id].size() >= depth) {
      elided[id] = has_children;
      continue;
    }
    std::size_t keep = n ? std::min(*n, width) : width;
    elided[id] = !n || *n > width;
    for (std::size_t k = 0; k < keep; ++k) {
      if (parent.size() >= bound)
        throw std::invalid_argument("truncation exceeds the node bound " + std::to_string(bound));
      NodeId p = paths[id];
      p.push_back(k);
      parent.push_back(id);
      paths.push_back(std::move(p));
      elided.push_back(false);
      queue.emplace_back(parent.size() - 1, node.child(k));
    }
  }
  return {FinTree(std::move(parent)), std::move(paths), std::move(elided)};
}

std::vector<std::size_t> induced_wellorder(const FinTree& T, const std::vector<std::size_t>& psi) {
  std::vector<bool> placed(T.size(), false);
  std::vector<std::size_t> order;
  for (std::size_t v : psi) {
    if (v >= T.size()) throw std::invalid_argument("psi names node " + std::to_string(v) + " outside the tree");
    for (std::size_t a : T.chain_to(v)) {
      if (placed[a]) continue;
      placed[a] = true;
      order.push_back(a);
    }
  }
  for (std::size_t v = 0; v < T.size(); ++v)
    if (!placed[v]) throw std::invalid_argument("psi does not cover node " + std::to_string(v));
  return order;
}

std::string to_dot(const TreeExpr& T, std::size_t depth, std::size_t width) {
  Truncation tr = truncate(T, depth, width);
  std::ostringstream out;
  out << "digraph tree {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < tr.tree.size(); ++i) {
    out << "  n" << i << " [label=\"" << to_string(tr.paths[i]) << "\\nrank " << to_string(T.at(tr.paths[i]).root_rank())
        << "\"" << (tr.elided[i] ? ", style=dashed" : "") << "];\n";
  }
  for (std::size_t i = 0; i < tr.tree.size(); ++i)
    for (std::size_t c : tr.tree.children(i)) out << "  n" << i << " -> n" << c << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace szt
