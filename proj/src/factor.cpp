#include "szt/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace szt {

namespace {

std::string node_pair(std::size_t t, std::size_t s) {
  return "(t=" + std::to_string(t) + ", s=" + std::to_string(s) + ")";
}

std::vector<Rational> row_times(const std::vector<Rational>& v, const RatMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("functional length does not match operator rows");
  std::vector<Rational> out(m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

void check_square_family(const std::vector<std::vector<Rational>>& fam, std::size_t n, std::size_t& dim,
                         const char* what) {
  if (fam.size() != n)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) + " entries, got " +
                                std::to_string(fam.size()));
  for (const auto& v : fam) {
    if (dim == FinTree::npos) dim = v.size();
    if (v.size() != dim) throw std::invalid_argument(std::string(what) + ": vectors of unequal length");
  }
}

}  // namespace

Rational operator_norm(const RatOperator& op) {
  Rational best = 0;
  if (op.domain == NormTag::l1) {
    for (std::size_t j = 0; j < op.cols(); ++j) best = std::max(best, vec_norm(op.m.col(j), op.codomain));
    return best;
  }
  if (op.codomain == NormTag::sup) {
    for (std::size_t i = 0; i < op.rows(); ++i) best = std::max(best, vec_norm(op.m.row(i), dual(op.domain)));
    return best;
  }
  throw std::domain_error("operator norm " + to_string(op.domain) + " -> " + to_string(op.codomain) +
                          " is not supported");
}

RatMatrix sigma_matrix(const FinTree& T) {
  RatMatrix m(T.size(), T.size());
  for (std::size_t t = 0; t < T.size(); ++t)
    for (std::size_t s : T.chain_to(t)) m(t, s) = 1;
  return m;
}

Witness canonical_witness(const FinTree& T) {
  Witness w;
  w.delta = 1;
  w.space = NormTag::l1;
  RatMatrix sig = sigma_matrix(T);
  for (std::size_t t = 0; t < T.size(); ++t) {
    std::vector<Rational> e(T.size(), Rational(0));
    e[t] = 1;
    w.x.push_back(std::move(e));
    w.xstar.push_back(sig.row(t));
    w.diag.push_back(1);
  }
  return w;
}

WitnessReport verify_witness(const FinTree& T, const Witness& w) {
  const std::size_t n = T.size();
  std::size_t dim = FinTree::npos;
  check_square_family(w.x, n, dim, "witness x");
  check_square_family(w.xstar, n, dim, "witness xstar");
  if (w.diag.size() != n) throw std::invalid_argument("witness diag: expected " + std::to_string(n) + " entries");

  WitnessReport rep;
  auto fail = [&](std::string d, std::size_t t = FinTree::npos, std::size_t s = FinTree::npos) {
    rep.valid = false;
    rep.detail = std::move(d);
    rep.t = t;
    rep.s = s;
    return rep;
  };
  if (w.delta <= 0) return fail("delta must be positive");
  for (std::size_t t = 0; t < n; ++t) {
    if (!norm_at_most(w.x[t], w.space, 1)) return fail("x_" + std::to_string(t) + " leaves the unit ball", t, t);
    if (dot(w.xstar[t], w.x[t]) != w.diag[t])
      return fail("diag(" + std::to_string(t) + ") differs from <x_t*,x_t>", t, t);
    if (w.diag[t] < w.delta)
      return fail("diag(" + std::to_string(t) + ") = " + to_string(w.diag[t]) + " is below delta", t, t);
  }
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s) {
      Rational p = dot(w.xstar[t], w.x[s]);
      Rational want = T.leq(s, t) ? w.diag[s] : Rational(0);
      if (p != want)
        return fail("pairing " + node_pair(t, s) + " is " + to_string(p) + ", expected " + to_string(want), t, s);
    }
  return rep;
}

Factorization witness_to_factorization(const FinTree& T, const Witness& w, const RatOperator& Top,
                                       const std::vector<std::vector<Rational>>& vstar) {
  auto rep = verify_witness(T, w);
  if (!rep.valid) throw std::invalid_argument("witness invalid: " + rep.detail);
  const std::size_t n = T.size();
  const std::size_t dx = w.x.empty() ? 0 : w.x.front().size();
  if (Top.cols() != dx) throw std::invalid_argument("operator domain dimension does not match the witness");
  if (Top.domain != w.space) throw std::invalid_argument("operator domain norm does not match the witness space");
  if (vstar.size() != n) throw std::invalid_argument("one lifted functional per node is required");

  Factorization f;
  f.U.m = RatMatrix(dx, n);
  f.U.domain = NormTag::l1;
  f.U.codomain = w.space;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t i = 0; i < dx; ++i) f.U.m(i, s) = w.x[s][i] / w.diag[s];

  f.V.m = RatMatrix(n, Top.rows());
  f.V.domain = Top.codomain;
  f.V.codomain = NormTag::sup;
  for (std::size_t t = 0; t < n; ++t) {
    if (vstar[t].size() != Top.rows()) throw std::invalid_argument("functional v_" + std::to_string(t) + " has wrong length");
    if (!norm_at_most(vstar[t], dual(Top.codomain), 1))
      throw std::invalid_argument("functional v_" + std::to_string(t) + " has norm above 1");
    if (row_times(vstar[t], Top.m) != w.xstar[t])
      throw std::invalid_argument("v_" + std::to_string(t) + " * T differs from x_" + std::to_string(t) + "*");
    for (std::size_t j = 0; j < Top.rows(); ++j) f.V.m(t, j) = vstar[t][j];
  }
  if (f.V.m * Top.m * f.U.m != sigma_matrix(T)) throw std::logic_error("V T U differs from Sigma_T");
  return f;
}

std::optional<std::vector<std::vector<Rational>>> lift_functionals(const RatOperator& Top,
                                                                   const std::vector<std::vector<Rational>>& xstar) {
  RatMatrix gram = Top.m.transpose() * Top.m;
  std::vector<std::vector<Rational>> out;
  for (const auto& xs : xstar) {
    if (xs.size() != Top.cols()) throw std::invalid_argument("functional length does not match operator columns");
    auto w = solve(gram, xs);
    if (!w) return std::nullopt;
    std::vector<Rational> v(Top.rows(), Rational(0));
    for (std::size_t i = 0; i < Top.rows(); ++i)
      for (std::size_t j = 0; j < Top.cols(); ++j) v[i] += Top.m(i, j) * (*w)[j];
    out.push_back(std::move(v));
  }
  return out;
}

Witness factorization_to_witness(const FinTree& T, const RatOperator& U, const RatOperator& V,
                                 const RatOperator& Top) {
  const std::size_t n = T.size();
  if (U.cols() != n || V.rows() != n || Top.cols() != U.rows() || V.cols() != Top.rows())
    throw std::invalid_argument("operator shapes do not compose to an operator on the tree");
  for (NormTag tag : {U.codomain, V.domain})
    if (tag == NormTag::l2) throw std::invalid_argument("factorization_to_witness needs l1 or sup spaces");
  RatMatrix comp = V.m * Top.m * U.m;
  RatMatrix sig = sigma_matrix(T);
  for (std::size_t s = 0; s < n; ++s)
    if (comp.col(s) != sig.col(s))
      throw std::invalid_argument("V T U e_" + std::to_string(s) + " differs from the indicator of the cone");

  Rational nu = operator_norm(U), nv = operator_norm(V);
  Witness w;
  w.space = U.codomain;
  w.delta = 1 / (nu * nv);
  for (std::size_t s = 0; s < n; ++s) {
    auto col = U.m.col(s);
    Rational len = vec_norm(col, U.codomain);
    if (len == 0) throw std::invalid_argument("U e_" + std::to_string(s) + " vanishes");
    for (auto& c : col) c /= len;
    w.x.push_back(std::move(col));
    w.diag.push_back(1 / (len * nv));
  }
  for (std::size_t t = 0; t < n; ++t) {
    auto f = row_times(V.m.row(t), Top.m);
    for (auto& c : f) c /= nv;
    w.xstar.push_back(std::move(f));
  }
  return w;
}

SubtreeFactorization subtree_factorization(const FinTree& S, const FinTree& T, const std::vector<std::size_t>& phi) {
  const std::size_t k = S.size();
  if (phi.size() != k) throw std::invalid_argument("embedding must assign every node of the source");
  for (std::size_t s = 0; s < k; ++s)
    if (phi[s] >= T.size()) throw std::invalid_argument("node " + std::to_string(s) + " maps outside the target");
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b && phi[a] == phi[b])
        throw std::invalid_argument("not injective: nodes " + std::to_string(a) + " and " + std::to_string(b));
      if (S.leq(a, b) != T.leq(phi[a], phi[b]))
        throw std::invalid_argument("order not preserved on the pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                    ")");
    }
  std::vector<std::size_t> img(phi);
  std::sort(img.begin(), img.end());
  std::vector<std::size_t> pos(k);
  for (std::size_t s = 0; s < k; ++s)
    pos[s] = static_cast<std::size_t>(std::lower_bound(img.begin(), img.end(), phi[s]) - img.begin());

  SubtreeFactorization out;
  out.A = {RatMatrix(k, k), NormTag::l1, NormTag::l1};
  out.U = {RatMatrix(T.size(), k), NormTag::l1, NormTag::l1};
  out.V = {RatMatrix(k, T.size()), NormTag::sup, NormTag::sup};
  out.B = {RatMatrix(k, k), NormTag::sup, NormTag::sup};
  for (std::size_t s = 0; s < k; ++s) {
    out.A.m(pos[s], s) = 1;
    out.B.m(s, pos[s]) = 1;
  }
  for (std::size_t i = 0; i < k; ++i) {
    out.U.m(img[i], i) = 1;
    out.V.m(i, img[i]) = 1;
  }
  out.composition = out.B.m * out.V.m * sigma_matrix(T) * out.U.m * out.A.m;
  out.equal = out.composition == sigma_matrix(S);
  return out;
}

GluedTree glue(const std::vector<FinTree>& family) {
  std::vector<std::size_t> parent{FinTree::npos};
  GluedTree g;
  g.branch.push_back(FinTree::npos);
  g.local.push_back(FinTree::npos);
  g.branches = family.size();
  for (std::size_t b = 0; b < family.size(); ++b) {
    const FinTree& T = family[b];
    std::vector<std::size_t> id(T.size(), 0);
    // Parents first: walk chains from the root.
    std::vector<std::size_t> order;
    std::vector<std::size_t> stack{T.root()};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      order.push_back(u);
      const auto& ch = T.children(u);
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    for (std::size_t u : order) {
      if (u == T.root()) continue;
      id[u] = parent.size();
      parent.push_back(T.parent(u) == T.root() ? 0 : id[T.parent(u)]);
      g.branch.push_back(b);
      g.local.push_back(u);
    }
  }
  g.tree = FinTree(std::move(parent));
  return g;
}

BranchWitness canonical_branch_witness(const GluedTree& G, const std::vector<Rational>& thresholds) {
  const std::size_t m = G.tree.size() - 1;
  BranchWitness w;
  w.thresholds = thresholds;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Rational> e(m, Rational(0)), f(m, Rational(0));
    e[k] = 1;
    for (std::size_t a : G.tree.chain_to(k + 1))
      if (a != 0) f[a - 1] = 1;
    w.x.push_back(std::move(e));
    w.xstar.push_back(std::move(f));
    w.diag.push_back(1);
  }
  return w;
}

BranchReport verify_branch_witness(const GluedTree& G, const BranchWitness& w) {
  const std::size_t m = G.tree.size() - 1;
  std::size_t dim = FinTree::npos;
  check_square_family(w.x, m, dim, "branch witness x");
  check_square_family(w.xstar, m, dim, "branch witness xstar");
  if (w.diag.size() != m) throw std::invalid_argument("branch witness diag has the wrong length");
  if (w.thresholds.size() != G.branches)
    throw std::invalid_argument("expected " + std::to_string(G.branches) + " branch thresholds");

  BranchReport rep;
  auto fail = [&](std::string d, std::size_t b) {
    rep.valid = false;
    rep.detail = std::move(d);
    rep.branch = b;
    return rep;
  };
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t b = G.branch[k + 1];
    if (!norm_at_most(w.x[k], w.space, 1)) return fail("x at node " + std::to_string(k + 1) + " leaves the unit ball", b);
    if (dot(w.xstar[k], w.x[k]) != w.diag[k])
      return fail("diag at node " + std::to_string(k + 1) + " differs from the pairing", b);
  }
  for (std::size_t t = 0; t < m; ++t)
    for (std::size_t s = 0; s < m; ++s) {
      Rational p = dot(w.xstar[t], w.x[s]);
      std::size_t b = G.branch[t + 1];
      if (G.tree.leq(s + 1, t + 1)) {
        if (p != w.diag[s])
          return fail("pairing " + node_pair(t + 1, s + 1) + " differs from the diagonal", b);
        if (!(w.diag[s] > w.thresholds[b]))
          return fail("branch " + std::to_string(b) + ": pairing at node " + std::to_string(s + 1) + " is " +
                          to_string(w.diag[s]) + ", not above " + to_string(w.thresholds[b]),
                      b);
      } else if (p != 0) {
        return fail("pairing " + node_pair(t + 1, s + 1) + " should vanish", b);
      }
    }
  return rep;
}

Rational basis_constant(const std::vector<std::vector<Rational>>& xs, NormTag n) {
  if (n == NormTag::l2) throw std::invalid_argument("basis_constant supports l1 and sup only");
  const std::size_t m = xs.size();
  if (m == 0) return 1;
  const std::size_t d = xs.front().size();
  RatMatrix X(d, m);
  for (std::size_t j = 0; j < m; ++j) {
    if (xs[j].size() != d) throw std::invalid_argument("basis vectors of unequal length");
    for (std::size_t i = 0; i < d; ++i) X(i, j) = xs[j][i];
  }
  if (rank(X) != m) throw std::invalid_argument("basis vectors are linearly dependent");

  std::vector<std::vector<Rational>> vertices;
  auto push_if_vertex = [&](std::vector<Rational> a) {
    std::vector<Rational> y(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < m; ++j) y[i] += X(i, j) * a[j];
    Rational len = vec_norm(y, n);
    if (len == 0) return;
    if (n == NormTag::l1) {
      for (auto& c : a) c /= len;
    } else if (len != 1) {
      return;
    }
    vertices.push_back(std::move(a));
  };

  // Row subsets of size r in lexicographic order.
  const std::size_t r = n == NormTag::sup ? m : m - 1;
  if (r > d) throw std::invalid_argument("more basis vectors than coordinates");
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  std::size_t budget = 4'000'000;
  while (true) {
    RatMatrix sub(r, m);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < m; ++j) sub(i, j) = X(pick[i], j);
    if (n == NormTag::l1) {
      auto ns = nullspace(sub);
      if (ns.size() == 1) push_if_vertex(ns.front());
    } else if (auto inv = inverse(sub)) {
      for (unsigned long sig = 0; sig < (1UL << m); ++sig) {
        if (budget-- == 0) throw std::runtime_error("basis_constant: dimension too large");
        std::vector<Rational> a(m, Rational(0));
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t i = 0; i < m; ++i) a[j] += (*inv)(j, i) * ((sig >> i) & 1UL ? -1 : 1);
        push_if_vertex(std::move(a));
      }
    }
    if (budget-- == 0) throw std::runtime_error("basis_constant: dimension too large");
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == d - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }

  Rational best = 1;
  for (const auto& a : vertices)
    for (std::size_t l = 1; l <= m; ++l) {
      std::vector<Rational> y(d, Rational(0));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < l; ++j) y[i] += X(i, j) * a[j];
      best = std::max(best, vec_norm(y, n));
    }
  return best;
}

std::vector<std::size_t> compatible_order(const FinTree& T) {
  auto codes = omega_code(T);
  std::map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < codes.size(); ++i) index[codes[i]] = i;
  std::vector<std::size_t> out;
  for (const auto& p : enumerate_compatible(to_expr(T), T.size())) out.push_back(index.at(p));
  return out;
}

}  // namespace szt
