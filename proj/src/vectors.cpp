#include "szt/vectors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>

namespace szt {

namespace {

void require_same_tree(const TreeExpr& a, const TreeExpr& b) {
  if (!(a == b)) throw std::invalid_argument("vectors live on different trees");
}

}  // namespace

SuppVec SuppVec::unit(const TreeExpr& T, const NodeId& t, const Rational& scale) {
  SuppVec v(T);
  v.set(t, scale);
  return v;
}

void SuppVec::set(const NodeId& t, const Rational& value) {
  if (!ambient_.contains(t)) throw std::out_of_range("node " + to_string(t) + " is not in the ambient tree");
  if (value == 0)
    entries_.erase(t);
  else
    entries_[t] = value;
}

Rational SuppVec::get(const NodeId& t) const {
  auto it = entries_.find(t);
  return it == entries_.end() ? Rational(0) : it->second;
}

SuppVec SuppVec::restricted_to_cone(const NodeId& t) const {
  SuppVec out(ambient_);
  for (const auto& [s, x] : entries_)
    if (leq(t, s)) out.entries_[s] = x;
  return out;
}

SuppVec operator+(const SuppVec& a, const SuppVec& b) {
  require_same_tree(a.ambient_, b.ambient_);
  SuppVec out = a;
  for (const auto& [t, x] : b.entries_) out.set(t, out.get(t) + x);
  return out;
}

SuppVec operator-(const SuppVec& a, const SuppVec& b) { return a + Rational(-1) * b; }

SuppVec operator*(const Rational& c, const SuppVec& v) {
  SuppVec out(v.ambient_);
  if (c == 0) return out;
  for (const auto& [t, x] : v.entries_) out.entries_[t] = c * x;
  return out;
}

StepFn::StepFn(TreeExpr ambient, std::map<NodeId, Rational> values)
    : ambient_(std::move(ambient)), values_(std::move(values)) {
  if (!values_.count(NodeId{})) values_[NodeId{}] = 0;
  for (const auto& [t, x] : values_) {
    if (t.empty()) continue;
    if (!values_.count(NodeId(t.begin(), t.end() - 1)))
      throw std::invalid_argument("step function nodes are not downwards closed at " + to_string(t));
    if (!ambient_.contains(t)) throw std::out_of_range("node " + to_string(t) + " is not in the ambient tree");
  }
}

StepFn StepFn::zero(const TreeExpr& T) { return StepFn(T, {}); }

Rational StepFn::eval(const NodeId& t) const {
  if (!ambient_.contains(t)) throw std::out_of_range("node " + to_string(t) + " is not in the ambient tree");
  for (std::size_t len = t.size() + 1; len-- > 0;) {
    auto it = values_.find(NodeId(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(len)));
    if (it != values_.end()) return it->second;
  }
  return 0;  // unreachable: the root is always present
}

std::vector<Region> StepFn::regions() const {
  std::vector<Region> out;
  for (const auto& [t, x] : values_) {
    Region r{t, {}, x};
    // Children of t in D follow t directly in the lexicographic map order.
    for (auto it = values_.upper_bound(t); it != values_.end() && leq(t, it->first); ++it)
      if (it->first.size() == t.size() + 1) r.excluded.push_back(it->first);
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::map<NodeId, Rational> union_values(const StepFn& a, const StepFn& b,
                                        const std::function<Rational(const Rational&, const Rational&)>& op) {
  std::set<NodeId> nodes;
  for (const auto& [t, x] : a.closure_values()) nodes.insert(t);
  for (const auto& [t, x] : b.closure_values()) nodes.insert(t);
  std::map<NodeId, Rational> out;
  for (const auto& t : nodes) out[t] = op(a.eval(t), b.eval(t));
  return out;
}

}  // namespace

StepFn operator+(const StepFn& a, const StepFn& b) {
  require_same_tree(a.ambient_, b.ambient_);
  return StepFn(a.ambient_, union_values(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); }));
}

StepFn operator*(const Rational& c, const StepFn& f) {
  std::map<NodeId, Rational> out;
  for (const auto& [t, x] : f.values_) out[t] = c * x;
  return StepFn(f.ambient_, std::move(out));
}

bool operator==(const StepFn& a, const StepFn& b) {
  if (!(a.ambient_ == b.ambient_)) return false;
  // Both are constant on the wedges of the joint closure.
  bool same = true;
  union_values(a, b, [&](const Rational& x, const Rational& y) {
    same = same && x == y;
    return Rational(0);
  });
  return same;
}

Rational l1_norm(const SuppVec& v) {
  Rational s = 0;
  for (const auto& [t, x] : v.entries()) s += abs(x);
  return s;
}

Rational sup_norm(const SuppVec& v) {
  Rational s = 0;
  for (const auto& [t, x] : v.entries()) s = std::max(s, abs(x));
  return s;
}

Rational norm(const SuppVec& v, VecNorm n) { return n == VecNorm::l1 ? l1_norm(v) : sup_norm(v); }

StepFn sigma_apply(const SuppVec& v) {
  std::map<NodeId, Rational> values;
  values[NodeId{}] = 0;
  for (const auto& [t, x] : v.entries())
    for (std::size_t len = 0; len <= t.size(); ++len)
      values.emplace(NodeId(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(len)), Rational(0));
  for (auto& [d, value] : values)
    for (const auto& [s, x] : v.entries())
      if (leq(s, d)) value += x;
  return StepFn(v.ambient(), std::move(values));
}

StepFn sigma0_apply(const SuppVec& v) {
  if (v.entries().count(NodeId{})) throw std::invalid_argument("sigma0_apply: the root is in the support");
  return sigma_apply(v);
}

Rational sup_norm(const StepFn& f) {
  // Every region contains its apex, so none is empty.
  Rational s = 0;
  for (const auto& r : f.regions()) s = std::max(s, abs(r.value));
  return s;
}

std::vector<std::vector<NodeId>> interval_traces(const SuppVec& v) {
  std::vector<NodeId> supp;
  for (const auto& [t, x] : v.entries()) supp.push_back(t);
  std::vector<std::vector<NodeId>> out;
  for (const auto& a : supp)
    for (const auto& b : supp) {
      if (!leq(a, b)) continue;
      std::vector<NodeId> trace;
      for (const auto& c : supp)
        if (leq(a, c) && leq(c, b)) trace.push_back(c);
      out.push_back(std::move(trace));
    }
  return out;
}

namespace {

using Mask = std::uint32_t;

struct Trace {
  Mask mask;
  Rational sum;
  Rational square;
};

class JamesSearch {
 public:
  JamesSearch(std::vector<Rational> values, std::vector<Trace> traces)
      : values_(std::move(values)), n_(values_.size()) {
    by_node_.resize(n_);
    std::sort(traces.begin(), traces.end(), [](const Trace& a, const Trace& b) {
      if (a.square != b.square) return a.square > b.square;
      return a.mask < b.mask;
    });
    traces_ = std::move(traces);
    for (std::size_t k = 0; k < traces_.size(); ++k) {
      Mask m = traces_[k].mask;
      for (std::size_t i = 0; i < n_; ++i)
        if (m >> i & 1u) by_node_[i].push_back(k);
    }
  }

  void run() {
    // Singletons give a feasible starting point.
    best_ = 0;
    best_choice_.clear();
    for (std::size_t i = 0; i < n_; ++i) {
      best_ += values_[i] * values_[i];
      for (std::size_t k : by_node_[i])
        if (traces_[k].mask == (Mask(1) << i)) best_choice_.push_back(k);
    }
    Mask all = n_ == 32 ? ~Mask(0) : (Mask(1) << n_) - 1;
    recurse(all, Rational(0));
  }

  const Rational& best() const { return best_; }
  const std::vector<std::size_t>& choice() const { return best_choice_; }
  const Trace& trace(std::size_t k) const { return traces_[k]; }

 private:
  void recurse(Mask uncovered, const Rational& acc) {
    if (uncovered == 0) {
      if (acc > best_) {
        best_ = acc;
        best_choice_ = current_;
      }
      return;
    }
    Rational rest = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (uncovered >> i & 1u) rest += abs(values_[i]);
    if (acc + rest * rest <= best_) return;
    std::size_t first = static_cast<std::size_t>(__builtin_ctz(uncovered));
    for (std::size_t k : by_node_[first]) {
      const Trace& t = traces_[k];
      if ((t.mask & ~uncovered) != 0) continue;
      current_.push_back(k);
      recurse(uncovered & ~t.mask, acc + t.square);
      current_.pop_back();
    }
  }

  std::vector<Rational> values_;
  std::size_t n_;
  std::vector<Trace> traces_;
  std::vector<std::vector<std::size_t>> by_node_;
  Rational best_;
  std::vector<std::size_t> best_choice_;
  std::vector<std::size_t> current_;
};

}  // namespace

JamesNorm james_norm(const SuppVec& v, std::size_t max_support) {
  const std::size_t n = v.support_size();
  if (n > max_support || n > 31)
    throw std::invalid_argument("james_norm: support of " + std::to_string(n) + " nodes exceeds the limit " +
                                std::to_string(std::min<std::size_t>(max_support, 31)));
  std::vector<NodeId> supp;
  std::vector<Rational> values;
  for (const auto& [t, x] : v.entries()) {
    supp.push_back(t);
    values.push_back(x);
  }
  std::vector<Trace> traces;
  std::set<Mask> seen;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq(supp[a], supp[b])) continue;
      Trace t{0, 0, 0};
      for (std::size_t c = 0; c < n; ++c)
        if (leq(supp[a], supp[c]) && leq(supp[c], supp[b])) {
          t.mask |= Mask(1) << c;
          t.sum += values[c];
        }
      if (!seen.insert(t.mask).second) continue;
      t.square = t.sum * t.sum;
      traces.push_back(std::move(t));
    }
  JamesSearch search(values, std::move(traces));
  search.run();
  JamesNorm out;
  out.squared = search.best();
  out.value = sqrt_enclosure(out.squared);
  for (std::size_t k : search.choice()) {
    std::vector<NodeId> nodes;
    for (std::size_t c = 0; c < n; ++c)
      if (search.trace(k).mask >> c & 1u) nodes.push_back(supp[c]);
    out.family.push_back(std::move(nodes));
  }
  std::sort(out.family.begin(), out.family.end());
  return out;
}

ChainCheck chain_inequality_check(const SuppVec& v) {
  ChainCheck c;
  c.sup = sup_norm(sigma_apply(v));
  c.james_squared = james_norm(v).squared;
  c.l1 = l1_norm(v);
  c.lower_gap = c.james_squared - c.sup * c.sup;
  c.upper_gap = c.l1 * c.l1 - c.james_squared;
  c.holds = c.lower_gap >= 0 && c.upper_gap >= 0;
  return c;
}

bool eps_separated(const std::vector<SuppVec>& points, const Rational& eps, VecNorm n) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (!(norm(points[i] - points[j], n) > eps)) return false;
  return true;
}

bool eps_separated(const std::vector<StepFn>& points, const Rational& eps, VecNorm n) {
  if (n != VecNorm::sup) throw std::invalid_argument("step functions are compared in the sup norm only");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (!(sup_norm(points[i] + Rational(-1) * points[j]) > eps)) return false;
  return true;
}

bool delta_net_check(const std::vector<SuppVec>& candidates, const std::vector<SuppVec>& targets,
                     const Rational& delta, VecNorm n) {
  for (const auto& w : targets) {
    bool covered = false;
    for (const auto& z : candidates) {
      if (norm(w - z, n) <= delta) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace szt
