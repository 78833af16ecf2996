#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace szt::verify {

FinTree random_fintree(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> parent(n, FinTree::npos);
  for (std::size_t i = 1; i < n; ++i) parent[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
  return FinTree(std::move(parent));
}

std::vector<std::vector<bool>> iterated_derivations(const FinTree& T) {
  std::vector<std::vector<bool>> levels;
  std::vector<bool> alive(T.size(), true);
  std::size_t count = T.size();
  levels.push_back(alive);
  while (count > 0) {
    std::vector<bool> next = alive;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (!alive[i]) continue;
      bool maximal = true;
      for (std::size_t c : T.children(i)) maximal = maximal && !alive[c];
      if (maximal) {
        next[i] = false;
        --count;
      }
    }
    alive = std::move(next);
    levels.push_back(alive);
  }
  return levels;
}

std::vector<std::size_t> leaf_stripping_ranks(const FinTree& T) {
  auto levels = iterated_derivations(T);
  std::vector<std::size_t> rank(T.size(), 0);
  for (std::size_t k = 0; k + 1 < levels.size(); ++k)
    for (std::size_t i = 0; i < T.size(); ++i)
      if (levels[k][i] && !levels[k + 1][i]) rank[i] = k;
  return rank;
}

std::string check_embedding(const TreeExpr& S, const TreeExpr& target, const Embedding& phi) {
  // Enumerate S independently by walking child indices.
  std::vector<NodeId> nodes;
  std::vector<std::pair<NodeId, TreeExpr>> stack{{NodeId{}, S}};
  while (!stack.empty()) {
    auto [path, node] = stack.back();
    stack.pop_back();
    nodes.push_back(path);
    auto n = node.child_count();
    if (!n) return "source is not finite";
    for (std::size_t k = 0; k < *n; ++k) {
      NodeId c = path;
      c.push_back(k);
      stack.emplace_back(std::move(c), node.child(k));
    }
  }
  if (phi.size() != nodes.size()) return "map is not total on the source";
  std::set<NodeId> image;
  for (const auto& s : nodes) {
    auto it = phi.find(s);
    if (it == phi.end()) return "source node " + to_string(s) + " is unmapped";
    if (!target.contains(it->second)) return "image " + to_string(it->second) + " is not a target node";
    image.insert(it->second);
  }
  if (phi.at(NodeId{}) != NodeId{}) return "root is not mapped to root";
  if (image.size() != nodes.size()) return "map is not injective";
  for (const auto& s : nodes)
    for (const auto& t : nodes) {
      bool src = s.size() <= t.size() && std::equal(s.begin(), s.end(), t.begin());
      const auto& a = phi.at(s);
      const auto& b = phi.at(t);
      bool dst = a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
      if (src != dst) return "order not preserved between " + to_string(s) + " and " + to_string(t);
    }
  for (const auto& u : image)
    for (std::size_t k = 0; k < u.size(); ++k)
      if (!image.count(NodeId(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k))))
        return "image is not downwards closed at " + to_string(u);
  return {};
}

namespace {

bool prefix(const NodeId& s, const NodeId& t) {
  return s.size() <= t.size() && std::equal(s.begin(), s.end(), t.begin());
}

}  // namespace

Rational james_squared_exhaustive(const SuppVec& v) {
  std::vector<NodeId> nodes;
  std::vector<Rational> values;
  for (const auto& [t, x] : v.entries()) {
    nodes.push_back(t);
    values.push_back(x);
  }
  const std::size_t n = nodes.size();
  if (n == 0) return 0;
  if (n > 10) throw std::invalid_argument("exhaustive James oracle is limited to 10 support nodes");

  auto block_ok = [&](const std::vector<std::size_t>& block) {
    for (auto a : block)
      for (auto b : block)
        if (!prefix(nodes[a], nodes[b]) && !prefix(nodes[b], nodes[a])) return false;
    std::size_t lo = block[0], hi = block[0];
    for (auto a : block) {
      if (prefix(nodes[a], nodes[lo])) lo = a;
      if (prefix(nodes[hi], nodes[a])) hi = a;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (!prefix(nodes[lo], nodes[c]) || !prefix(nodes[c], nodes[hi])) continue;
      if (std::find(block.begin(), block.end(), c) == block.end()) return false;
    }
    return true;
  };

  // Restricted growth strings enumerate set partitions.
  std::vector<std::size_t> label(n, 0);
  Rational best = 0;
  while (true) {
    std::size_t blocks = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<std::size_t>> parts(blocks);
    for (std::size_t i = 0; i < n; ++i) parts[label[i]].push_back(i);
    bool ok = true;
    Rational total = 0;
    for (const auto& p : parts) {
      if (!block_ok(p)) {
        ok = false;
        break;
      }
      Rational s = 0;
      for (auto i : p) s += values[i];
      total += s * s;
    }
    if (ok && total > best) best = total;

    std::size_t i = n;
    while (i-- > 1) {
      std::size_t limit = *std::max_element(label.begin(), label.begin() + static_cast<std::ptrdiff_t>(i)) + 1;
      if (label[i] < limit) {
        ++label[i];
        std::fill(label.begin() + static_cast<std::ptrdiff_t>(i) + 1, label.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return best;
}

}  // namespace szt::verify
