#include "szt/szlenk.hpp"

#include <set>
#include <stdexcept>

namespace szt {

namespace {

void require_positive(const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("epsilon must be positive, got " + to_string(eps));
}

// The xi-th derivation of M's survivors, valid for every eps > 0.
Subspace stage(const DualModel& M, const Rational& eps, const Ordinal& xi) {
  if (xi.is_zero()) return M.survivors;
  if (eps >= 1) return Subspace::empty_of(M.tree);
  const Subspace& s = M.survivors;
  if (s.empty()) return s;
  return Subspace(s.base(), s.base_level(), s.cb_level() + xi);
}

}  // namespace

SuppVec model_point(const TreeExpr& T, const NodeId& t) {
  if (!T.contains(t)) throw std::out_of_range("node " + to_string(t) + " is not in the tree");
  SuppVec v(T);
  NodeId prefix;
  for (std::size_t k : t) {
    prefix.push_back(k);
    v.set(prefix, 1);
  }
  return v;
}

DualModel build_model(const TreeExpr& T, std::size_t sample) {
  DualModel m{T, Subspace::whole(T), 0};
  auto nodes = enumerate_compatible(T, std::max<std::size_t>(sample, 1));
  std::vector<SuppVec> pts;
  for (const auto& t : nodes) pts.push_back(model_point(T, t));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (sup_norm(pts[i] - pts[j]) != 1)
        throw std::logic_error("model points " + to_string(nodes[i]) + " and " + to_string(nodes[j]) +
                               " are not at distance 1");
  m.separation_checked = pts.size();
  return m;
}

DualModel build_model(const Forest&) {
  throw std::invalid_argument("build_model needs a rooted tree; a forest has no root");
}

DualModel szlenk_derive(const DualModel& M, const Rational& eps) {
  require_positive(eps);
  DualModel out = M;
  out.survivors = stage(M, eps, 1UL);
  return out;
}

Ordinal szlenk_index(const DualModel& M, const Rational& eps) {
  require_positive(eps);
  const Subspace& s = M.survivors;
  if (s.empty()) return 0UL;
  if (eps >= 1) return 1UL;
  // Survivors at stage z are the nodes with CB height >= level + z, so the
  // first empty stage is the least z with level + z > reach(root).
  Ordinal reach = cb_reach(s.base(), {}, s.base_level());
  return left_subtract(s.cb_level(), successor(reach));
}

Subspace level_set(const DualModel& M, const Rational& eps, const Ordinal& xi) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("level_set needs 0 < epsilon < 1, got " + to_string(eps));
  return stage(M, eps, xi);
}

LevelCertificate level_set_certificate(const DualModel& M, const Rational& eps, const Ordinal& xi, std::size_t depth,
                                       std::size_t width) {
  Subspace s = level_set(M, eps, xi);
  DerivedView d = derive(M.tree, xi);
  LevelCertificate c;
  for (const auto& p : truncate(M.tree, depth, width).paths) {
    ++c.checked;
    if (s.contains(p) != d.contains(p)) {
      c.equal = false;
      c.mismatches.push_back(p);
    }
  }
  return c;
}

std::vector<TraceLevel> trace(const DualModel& M, const Rational& eps, const Ordinal& levels) {
  require_positive(eps);
  auto window = truncate(M.tree, 3, 4).paths;
  std::set<Ordinal> marks;
  for (unsigned long k = 0; k < 6; ++k) marks.insert(Ordinal(k));
  if (eps < 1)
    for (const auto& p : window) {
      Ordinal h = M.survivors.contains(p) ? cb_height(M.tree, p, M.survivors.base_level()) : Ordinal(0UL);
      if (h >= M.survivors.cb_level()) {
        Ordinal rel = left_subtract(M.survivors.cb_level(), h);
        marks.insert(rel);
        marks.insert(successor(rel));
      }
    }
  Ordinal index = szlenk_index(M, eps);
  std::vector<TraceLevel> out;
  for (const auto& xi : marks) {
    if (!(xi < levels) || xi > index) continue;
    Subspace now = stage(M, eps, xi), next = stage(M, eps, successor(xi));
    TraceLevel lv{xi, now.descriptor(), {}};
    for (const auto& p : window) {
      if (lv.removed_sample.size() >= 5) break;
      if (now.contains(p) && !next.contains(p)) lv.removed_sample.push_back(p);
    }
    out.push_back(std::move(lv));
  }
  return out;
}

SpoIndexReport spoindex_check(const TreeExpr& T) {
  if (T.size()) throw std::invalid_argument("spoindex_check needs an infinite tree");
  if (T.child_count()) throw std::invalid_argument("spoindex_check needs an infinitely branching root");
  SpoIndexReport r;
  r.rho = rank_tree(T);
  r.alpha = leading_alpha(r.rho);
  r.rho_times_omega = r.rho * omega_pow(1UL);
  r.omega_alpha_plus_one = omega_pow(successor(r.alpha));
  r.equal = r.rho_times_omega == r.omega_alpha_plus_one;
  r.rho_successor = is_successor(r.rho) && r.rho >= 2UL;
  r.rho_above_omega_alpha = r.rho > omega_pow(r.alpha);
  r.model_lower_bound = szlenk_index(build_model(T), Rational(1, 2));
  return r;
}

HalvingStep halving_schedule(const Ordinal& zeta, const Rational& eps, unsigned long n) {
  require_positive(eps);
  Rational e = eps / Rational(pow2(n + 1));
  return {e, nat_mul(zeta, pow2(n))};
}

}  // namespace szt
