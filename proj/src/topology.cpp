#include "szt/topology.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace szt {

bool wedge_member(const TreeExpr& T, const WedgeNbhd& nb, const NodeId& x) {
  if (!T.contains(nb.apex)) throw std::out_of_range("wedge apex " + to_string(nb.apex) + " is not a node");
  if (!T.contains(x)) throw std::out_of_range("node " + to_string(x) + " is not in the tree");
  for (const auto& s : nb.excluded) {
    if (s.size() != nb.apex.size() + 1 || !leq(nb.apex, s))
      throw std::invalid_argument("excluded node " + to_string(s) + " is not a child of " + to_string(nb.apex));
    if (!T.contains(s)) throw std::out_of_range("excluded node " + to_string(s) + " is not a node");
  }
  if (!leq(nb.apex, x)) return false;
  for (const auto& s : nb.excluded)
    if (leq(s, x)) return false;
  return true;
}

namespace {

NodeId parse_path(const std::string& text, std::size_t& pos) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("wedge literal '" + text + "': " + why);
  };
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  NodeId out;
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
    return out;
  }
  while (true) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a child index");
    out.push_back(std::stoull(text.substr(start, pos - start)));
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < text.size() && text[pos] == ']') {
      ++pos;
      return out;
    }
    fail("expected ',' or ']'");
  }
}

}  // namespace

WedgeNbhd parse_wedge(const std::string& text) {
  WedgeNbhd nb;
  if (text.rfind("t=", 0) != 0) throw std::invalid_argument("wedge literal '" + text + "' must start with t=");
  std::size_t pos = 2;
  nb.apex = parse_path(text, pos);
  if (pos == text.size()) return nb;
  const std::string key = ";exclude=";
  if (text.compare(pos, key.size(), key) != 0)
    throw std::invalid_argument("wedge literal '" + text + "': expected ;exclude=");
  pos += key.size();
  if (pos == text.size()) return nb;
  while (true) {
    nb.excluded.push_back(parse_path(text, pos));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw std::invalid_argument("wedge literal '" + text + "': expected ','");
    ++pos;
  }
  return nb;
}

std::string to_string(const WedgeNbhd& nb) {
  std::string out = "t=" + to_string(nb.apex);
  if (nb.excluded.empty()) return out;
  out += ";exclude=";
  for (std::size_t i = 0; i < nb.excluded.size(); ++i) out += (i ? "," : "") + to_string(nb.excluded[i]);
  return out;
}

namespace {

bool infinitely_branching(const TreeExpr& node) { return !node.child_count().has_value(); }

// Largest CB height over the cone of `node` within T^(x0); `node` must be in
// T^(x0).
Ordinal reach_of(const TreeExpr& node, const Ordinal& x0) {
  if (infinitely_branching(node)) return left_subtract(x0, node.root_rank());
  Ordinal best;
  const std::size_t n = *node.child_count();
  for (std::size_t k = 0; k < n; ++k) {
    TreeExpr c = node.child(k);
    if (c.root_rank() >= x0) best = std::max(best, reach_of(c, x0));
  }
  return best;
}

Ordinal height_of(const TreeExpr& node, const Ordinal& x0) {
  if (infinitely_branching(node)) return left_subtract(x0, node.root_rank());
  return Ordinal{};
}

}  // namespace

Subspace::Subspace(TreeExpr base, Ordinal base_level, Ordinal cb_level)
    : base_(std::move(base)), base_level_(std::move(base_level)), cb_level_(std::move(cb_level)) {}

Subspace Subspace::empty_of(const TreeExpr& T) { return Subspace(T, successor(T.root_rank()), 0UL); }

bool Subspace::contains(const NodeId& t) const {
  if (!base_.contains(t)) return false;
  TreeExpr node = base_.at(t);
  if (node.root_rank() < base_level_) return false;
  return height_of(node, base_level_) >= cb_level_;
}

bool Subspace::empty() const {
  if (base_.root_rank() < base_level_) return true;
  return reach_of(base_, base_level_) < cb_level_;
}

bool Subspace::downward_closed() const {
  // Beyond the first step only infinitely branching nodes survive; their
  // infinitely branching ancestors have larger rank and survive too, so the
  // only possible defect is a surviving node below a finitely branching one.
  if (cb_level_.is_zero() || empty()) return true;
  return infinitely_branching(base_);
}

std::string Subspace::descriptor() const {
  if (empty()) return "empty";
  std::string out = base_level_.is_zero() ? "T" : "T^(" + to_string(base_level_) + ")";
  if (!cb_level_.is_zero()) out = "CB^(" + to_string(cb_level_) + ")(" + out + ")";
  return out;
}

Ordinal cb_height(const TreeExpr& T, const NodeId& t, const Ordinal& base_level) {
  TreeExpr node = T.at(t);
  if (node.root_rank() < base_level)
    throw std::invalid_argument("node " + to_string(t) + " is not in T^(" + to_string(base_level) + ")");
  return height_of(node, base_level);
}

Ordinal cb_reach(const TreeExpr& T, const NodeId& t, const Ordinal& base_level) {
  TreeExpr node = T.at(t);
  if (node.root_rank() < base_level)
    throw std::invalid_argument("node " + to_string(t) + " is not in T^(" + to_string(base_level) + ")");
  return reach_of(node, base_level);
}

bool is_isolated(const Subspace& V, const NodeId& t) {
  if (!V.contains(t)) throw std::invalid_argument("node " + to_string(t) + " is not in " + V.descriptor());
  TreeExpr node = V.base().at(t);
  // Finitely many children: excluding all of them leaves the wedge {t}.
  if (!infinitely_branching(node)) return true;
  // Otherwise infinitely many children meet V exactly when h(t) > level.
  return height_of(node, V.base_level()) == V.cb_level();
}

CbStep cb_derive(const Subspace& V) {
  Subspace next(V.base(), V.base_level(), successor(V.cb_level()));
  if (V.empty()) next = Subspace::empty_of(V.base());
  return {next, next.downward_closed()};
}

Ordinal cb_rank(const TreeExpr& T) { return successor(reach_of(T, 0UL)); }

bool check_closed_downward(const FinTree& T, const std::vector<bool>& set) {
  if (set.size() != T.size()) throw std::invalid_argument("node set size does not match the tree");
  // The complement is the union of the cones T[t<=] over t outside S exactly
  // when none of those cones meets S.
  for (std::size_t t = 0; t < T.size(); ++t) {
    if (set[t]) continue;
    for (std::size_t w = 0; w < T.size(); ++w)
      if (set[w] && T.leq(t, w)) return false;
  }
  return true;
}

ContinuityReport check_embedding_continuity(const Embedding& phi, const TreeExpr& S, const TreeExpr& T) {
  std::set<NodeId> image;
  for (const auto& [s, t] : phi) {
    if (!S.contains(s)) throw std::invalid_argument("domain node " + to_string(s) + " is not in the source");
    if (!T.contains(t)) throw std::invalid_argument("image node " + to_string(t) + " is not in the target");
    image.insert(t);
  }
  if (!S.size() || phi.size() != *S.size()) throw std::invalid_argument("map must be total on a finite source");
  for (const auto& u : image)
    for (std::size_t k = 0; k < u.size(); ++k)
      if (!image.count(NodeId(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k))))
        throw std::invalid_argument("image not downwards closed: missing ancestor of " + to_string(u));

  // Preimage of T[t<=] for t in the image must be S[s<=] with phi(s) = t.
  std::map<NodeId, NodeId> inverse;
  for (const auto& [s, t] : phi) inverse[t] = s;
  if (inverse.size() != phi.size()) return {false, "map is not injective"};
  for (const auto& [t, s] : inverse) {
    for (const auto& [s2, t2] : phi) {
      bool in_pre = leq(t, t2);
      bool in_cone = leq(s, s2);
      if (in_pre != in_cone)
        return {false, "preimage of cone at " + to_string(t) + " is not the cone at " + to_string(s) +
                           " (differs at " + to_string(s2) + ")"};
    }
  }
  // Cones at children of image nodes outside the image have empty preimage,
  // which holds because the image is downwards closed: any image node above
  // such a child would force the child into the image.
  return {true, "preimages of image cones are cones; other cones pull back to the empty set"};
}

CompactnessReport compactness_report(const TreeExpr&) {
  CompactnessReport r;
  r.chain_reason = "well-founded by construction, so every chain is finite and has a supremum";
  r.min_reason = "rooted: MIN(T) is the root alone";
  return r;
}

CompactnessReport compactness_report(const Forest& F) {
  CompactnessReport r;
  r.chain_reason = "each component is a well-founded constructor tree";
  auto n = F.count();
  r.min_finite = n.has_value();
  r.compact = r.chain_complete && r.min_finite;
  r.min_reason = n ? "MIN is the " + std::to_string(*n) + " component roots" : "MIN is the infinite set of component roots";
  return r;
}

CompactnessReport compactness_report(const FinTree& T) {
  CompactnessReport r;
  r.chain_reason = "finite tree";
  r.min_reason = "finite tree with " + std::to_string(T.size()) + " nodes";
  return r;
}

}  // namespace szt
