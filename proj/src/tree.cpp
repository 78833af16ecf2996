#include "szt/tree.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace szt {

std::string to_string(const NodeId& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(t[i]);
  }
  return out + "]";
}

struct TreeExpr::Rep {
  std::shared_ptr<const ChildGen> gen;  // null for a leaf
  Ordinal rank;
  std::optional<std::size_t> size;
};

const std::shared_ptr<const TreeExpr::Rep>& TreeExpr::leaf_rep() {
  static const auto rep = [] {
    auto r = std::make_shared<Rep>();
    r->size = 1;
    return std::shared_ptr<const Rep>(r);
  }();
  return rep;
}

namespace {

std::optional<std::size_t> add_sizes(std::optional<std::size_t> a, std::optional<std::size_t> b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace

TreeExpr::TreeExpr() : rep_(leaf_rep()) {}

TreeExpr TreeExpr::node(ChildGen gen) {
  auto rep = std::make_shared<Rep>();
  rep->rank = gen.rank();
  switch (gen.kind) {
    case ChildGen::Kind::finite: {
      std::optional<std::size_t> size = 1;
      for (const auto& c : gen.finite.items) size = add_sizes(size, c.size());
      rep->size = size;
      break;
    }
    case ChildGen::Kind::blossom:
      rep->size = std::nullopt;
      break;
    case ChildGen::Kind::subselect: {
      auto n = gen.count();
      if (!n) {
        rep->size = std::nullopt;
        break;
      }
      std::optional<std::size_t> size = 1;
      for (std::size_t k = 0; k < *n; ++k) size = add_sizes(size, gen.child(k).size());
      rep->size = size;
      break;
    }
  }
  rep->gen = std::make_shared<const ChildGen>(std::move(gen));
  return TreeExpr(std::shared_ptr<const Rep>(std::move(rep)));
}

bool TreeExpr::is_leaf() const { return rep_->gen == nullptr; }

const ChildGen& TreeExpr::children() const {
  if (!rep_->gen) throw std::logic_error("a leaf has no child generator");
  return *rep_->gen;
}

std::shared_ptr<const ChildGen> TreeExpr::children_ptr() const { return rep_->gen; }

std::optional<std::size_t> TreeExpr::child_count() const {
  if (!rep_->gen) return 0;
  return rep_->gen->count();
}

TreeExpr TreeExpr::child(std::size_t k) const {
  if (!rep_->gen) throw std::out_of_range("child " + std::to_string(k) + " of a leaf");
  return rep_->gen->child(k);
}

const Ordinal& TreeExpr::root_rank() const { return rep_->rank; }

std::optional<std::size_t> TreeExpr::size() const { return rep_->size; }

TreeExpr TreeExpr::at(const NodeId& path) const {
  TreeExpr cur = *this;
  for (std::size_t i = 0; i < path.size(); ++i) {
    auto n = cur.child_count();
    if (n && path[i] >= *n)
      throw std::out_of_range("invalid NodeId " + szt::to_string(path) + ": step " + std::to_string(i) +
                              " has only " + std::to_string(*n) + " children");
    cur = cur.child(path[i]);
  }
  return cur;
}

bool TreeExpr::contains(const NodeId& path) const {
  TreeExpr cur = *this;
  for (std::size_t step : path) {
    auto n = cur.child_count();
    if (n && step >= *n) return false;
    cur = cur.child(step);
  }
  return true;
}

bool operator==(const TreeExpr& a, const TreeExpr& b) {
  if (a.rep_ == b.rep_) return true;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() == b.is_leaf();
  return a.children() == b.children();
}

ChildGen ChildGen::of_items(std::vector<TreeExpr> items) {
  ChildGen g;
  g.kind = Kind::finite;
  g.finite.items = std::move(items);
  return g;
}

ChildGen ChildGen::of_blossom(const Ordinal& xi) {
  if (xi.is_zero()) throw std::invalid_argument("Blossom generator needs a positive ordinal");
  ChildGen g;
  g.kind = Kind::blossom;
  g.blossom.xi = xi;
  return g;
}

ChildGen ChildGen::of_subselect(std::shared_ptr<const ChildGen> inner, std::size_t offset, std::size_t stride,
                                bool recursive) {
  if (!inner) throw std::invalid_argument("SubSelect needs an inner generator");
  if (stride == 0) throw std::invalid_argument("SubSelect stride must be positive");
  ChildGen g;
  g.kind = Kind::subselect;
  g.subselect = SubSelect{std::move(inner), offset, stride, recursive};
  return g;
}

std::optional<std::size_t> ChildGen::count() const {
  switch (kind) {
    case Kind::finite:
      return finite.items.size();
    case Kind::blossom:
      return std::nullopt;
    case Kind::subselect: {
      auto n = subselect.inner->count();
      if (!n) return std::nullopt;
      if (*n <= subselect.offset) return 0;
      return (*n - subselect.offset - 1) / subselect.stride + 1;
    }
  }
  return 0;
}

TreeExpr ChildGen::child(std::size_t k) const {
  switch (kind) {
    case Kind::finite:
      if (k >= finite.items.size())
        throw std::out_of_range("child " + std::to_string(k) + " of a " + std::to_string(finite.items.size()) +
                                "-child node");
      return finite.items[k];
    case Kind::blossom:
      return szt::blossom(fund_seq(blossom.xi, k));
    case Kind::subselect: {
      const auto& s = subselect;
      if (k > (std::numeric_limits<std::size_t>::max() - s.offset) / s.stride)
        throw std::out_of_range("child index overflow");
      const std::size_t idx = s.offset + k * s.stride;
      auto n = s.inner->count();
      if (n && idx >= *n) throw std::out_of_range("child " + std::to_string(k) + " outside the selection");
      TreeExpr c = s.inner->child(idx);
      if (s.recursive && !c.is_leaf() && !c.child_count())
        return TreeExpr::node(of_subselect(c.children_ptr(), s.offset, s.stride, true));
      return c;
    }
  }
  throw std::logic_error("unknown generator kind");
}

Ordinal ChildGen::rank() const {
  switch (kind) {
    case Kind::finite: {
      Ordinal best;
      for (const auto& c : finite.items) best = std::max(best, successor(c.root_rank()));
      return best;
    }
    case Kind::blossom:
      return blossom.xi;
    case Kind::subselect: {
      // A cofinal subsequence of a non-decreasing cofinal sequence keeps the sup.
      if (!subselect.inner->count()) return subselect.inner->rank();
      Ordinal best;
      const std::size_t n = *count();
      for (std::size_t k = 0; k < n; ++k) best = std::max(best, successor(child(k).root_rank()));
      return best;
    }
  }
  return Ordinal{};
}

bool operator==(const ChildGen& a, const ChildGen& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ChildGen::Kind::finite:
      return a.finite.items == b.finite.items;
    case ChildGen::Kind::blossom:
      return a.blossom.xi == b.blossom.xi;
    case ChildGen::Kind::subselect:
      return a.subselect.offset == b.subselect.offset && a.subselect.stride == b.subselect.stride &&
             a.subselect.recursive == b.subselect.recursive && *a.subselect.inner == *b.subselect.inner;
  }
  return false;
}

TreeExpr chain_tree(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a chain needs at least one node");
  TreeExpr t;
  for (std::size_t i = 1; i < n; ++i) t = TreeExpr::node(ChildGen::of_items({t}));
  return t;
}

bool leq(const NodeId& s, const NodeId& t) {
  return s.size() <= t.size() && std::equal(s.begin(), s.end(), t.begin());
}

bool leq(const TreeExpr& T, const NodeId& s, const NodeId& t) {
  if (!T.contains(s)) throw std::out_of_range("invalid NodeId " + to_string(s));
  if (!T.contains(t)) throw std::out_of_range("invalid NodeId " + to_string(t));
  return leq(s, t);
}

std::size_t height(const NodeId& t) { return t.size(); }

std::size_t height(const TreeExpr& T, const NodeId& t) {
  if (!T.contains(t)) throw std::out_of_range("invalid NodeId " + to_string(t));
  return t.size();
}

TreeExpr blossom(const Ordinal& xi) {
  if (xi.is_zero()) return TreeExpr::leaf();
  return TreeExpr::node(ChildGen::of_blossom(xi));
}

Ordinal rank_node(const TreeExpr& T, const NodeId& t) { return T.at(t).root_rank(); }

Ordinal rank_tree(const TreeExpr& T) { return successor(T.root_rank()); }

bool DerivedView::contains(const NodeId& t) const {
  if (!base_.contains(t)) return false;
  return base_.at(t).root_rank() >= level_;
}

bool DerivedView::empty() const { return base_.root_rank() < level_; }

DerivedView derive(const TreeExpr& T, const Ordinal& xi) { return DerivedView(T, xi); }

bool is_max(const TreeExpr& T, const DerivedView& view, const NodeId& t) {
  if (!(T == view.base())) throw std::invalid_argument("view belongs to a different tree");
  if (!view.contains(t)) throw std::invalid_argument("node " + to_string(t) + " is not in the view");
  return T.at(t).root_rank() == view.level();
}

std::vector<NodeId> enumerate_compatible(const TreeExpr& T, std::size_t budget) {
  if (budget == 0) throw std::invalid_argument("enumerate_compatible: budget must be positive");
  std::vector<NodeId> out{NodeId{}};
  std::deque<std::pair<NodeId, TreeExpr>> pending{{NodeId{}, T}};
  while (!pending.empty() && out.size() < budget) {
    auto [path, node] = pending.front();
    pending.pop_front();
    auto n = node.child_count();
    for (std::size_t k = 0; (!n || k < *n) && out.size() < budget; ++k) {
      NodeId c = path;
      c.push_back(k);
      out.push_back(c);
      pending.emplace_back(std::move(c), node.child(k));
    }
  }
  return out;
}

std::optional<std::size_t> Forest::count() const { return base_.child_count(); }

Forest star(const TreeExpr& T) { return Forest(T); }

Embedding embed_into(const TreeExpr& S, const TreeExpr& target) {
  if (!S.size()) throw std::invalid_argument("embed: source tree must be finite");
  if (rank_tree(S) > rank_tree(target))
    throw std::invalid_argument("embed: rank " + to_string(rank_tree(S)) + " of the source exceeds target rank " +
                                to_string(rank_tree(target)));
  Embedding phi;
  struct Item {
    NodeId src_path;
    TreeExpr src;
    NodeId dst_path;
    TreeExpr dst;
  };
  std::vector<Item> stack{{NodeId{}, S, NodeId{}, target}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    phi[it.src_path] = it.dst_path;
    const std::size_t n = *it.src.child_count();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<TreeExpr> kids;
    for (std::size_t k = 0; k < n; ++k) kids.push_back(it.src.child(k));
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return kids[a].root_rank() > kids[b].root_rank(); });
    std::vector<bool> used;
    const auto limit = it.dst.child_count();
    for (std::size_t k : order) {
      const Ordinal& need = kids[k].root_rank();
      std::size_t j = 0;
      for (;; ++j) {
        if (limit && j >= *limit)
          throw std::invalid_argument("embed: no room below target node " + to_string(it.dst_path));
        if (j < used.size() && used[j]) continue;
        if (it.dst.child(j).root_rank() >= need) break;
      }
      if (used.size() <= j) used.resize(j + 1, false);
      used[j] = true;
      NodeId sp = it.src_path, dp = it.dst_path;
      sp.push_back(k);
      dp.push_back(j);
      stack.push_back({std::move(sp), kids[k], std::move(dp), it.dst.child(j)});
    }
  }
  return phi;
}

Embedding embed(const TreeExpr& S, const Ordinal& xi) { return embed_into(S, blossom(xi)); }

TreeExpr full_subtree(const TreeExpr& T, std::size_t offset, std::size_t stride) {
  if (stride == 0) throw std::invalid_argument("full_subtree: stride must be positive");
  if (T.is_leaf()) return T;
  if (T.child_count())
    throw std::invalid_argument("full_subtree: finitely branching node (child cardinality would drop)");
  if (offset == 0 && stride == 1) return T;
  return TreeExpr::node(ChildGen::of_subselect(T.children_ptr(), offset, stride, true));
}

}  // namespace szt
