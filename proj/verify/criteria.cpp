#include "criteria.hpp"

#include "generators.hpp"
#include "oracles.hpp"
#include "szt/factor.hpp"
#include "szt/fdlab.hpp"
#include "szt/szlenk.hpp"
#include "szt/topology.hpp"
#include "szt/vectors.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace szt::verify {

namespace {

Ordinal O(const char* s) { return parse_ordinal(s); }

// Counts cases and keeps the first failure.
struct Tally {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::function<std::string()>& why) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first = why();
  }
};

// xi and the expected rank_tree(blossom(xi)) = xi + 1, written out.
const std::vector<std::pair<const char*, const char*>> kBlossomRanks = {
    {"0", "1"},         {"1", "2"},         {"2", "3"},
    {"5", "6"},         {"w", "w+1"},       {"w+1", "w+2"},
    {"w*2", "w*2+1"},   {"w^(2)", "w^(2)+1"}, {"w^(2)+w*3", "w^(2)+w*3+1"},
    {"w^(w)", "w^(w)+1"}};

const char* const kTreePool[] = {"1",     "2",         "3",        "5",     "w",      "w+1",     "w+3",
                                 "w*2",   "w*2+1",     "w^(2)",    "w^(2)+w*3", "w^(2)*2", "w^(3)", "w^(w)"};

Rational random_rational(std::mt19937_64& rng) {
  Rational r(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
  r.canonicalize();
  return r;
}

SuppVec random_vector(std::mt19937_64& rng, const TreeExpr& T, const std::vector<NodeId>& nodes, std::size_t k) {
  SuppVec v(T);
  for (std::size_t i = 0; i < k; ++i) v.set(nodes[rng() % nodes.size()], random_rational(rng));
  return v;
}

// [s <= t] from parent pointers alone.
bool ancestor_or_self(const FinTree& T, std::size_t s, std::size_t t) {
  for (std::size_t u = t; u != FinTree::npos; u = T.parent(u))
    if (u == s) return true;
  return false;
}

Ordinal below_w3(unsigned long c2, unsigned long c1, unsigned long c0) {
  std::vector<OrdinalTerm> terms;
  if (c2) terms.push_back({Ordinal(2UL), BigInt(c2)});
  if (c1) terms.push_back({Ordinal(1UL), BigInt(c1)});
  if (c0) terms.push_back({Ordinal(), BigInt(c0)});
  return Ordinal::from_terms(std::move(terms));
}

void c1_blossom_ranks(Tally& t, std::mt19937_64&) {
  for (const auto& [xi, expect] : kBlossomRanks) {
    Ordinal got = rank_tree(blossom(O(xi)));
    t.check(got == O(expect), [&] { return std::string("rank_tree(blossom(") + xi + ")) = " + to_string(got); });
  }
  for (unsigned long n = 0; n <= 5; ++n) {
    TreeExpr T = blossom(n);
    Truncation tr = truncate(T, n, 3);
    auto ranks = leaf_stripping_ranks(tr.tree);
    for (std::size_t i = 0; i < tr.paths.size(); ++i) {
      Ordinal structural = rank_node(T, tr.paths[i]);
      t.check(structural == Ordinal(ranks[i]), [&] {
        return "blossom(" + std::to_string(n) + ") node " + to_string(tr.paths[i]) + ": structural " +
               to_string(structural) + ", stripping " + std::to_string(ranks[i]);
      });
    }
  }
}

void c2_szlenk_model(Tally& t, std::mt19937_64&) {
  const Rational small[] = {Rational(1, 4), Rational(1, 2), Rational(9, 10)};
  const Rational big[] = {Rational(1), Rational(3, 2)};
  for (const auto& [xi, expect] : kBlossomRanks) {
    DualModel m = build_model(blossom(O(xi)));
    for (const auto& e : small) {
      Ordinal got = szlenk_index(m, e);
      t.check(got == O(expect), [&] { return std::string("xi=") + xi + " eps=" + to_string(e) + ": " + to_string(got); });
    }
    for (const auto& e : big) {
      Ordinal got = szlenk_index(m, e);
      t.check(got == 1UL, [&] { return std::string("xi=") + xi + " eps=" + to_string(e) + ": " + to_string(got); });
    }
  }
}

void c3_level_sets(Tally& t, std::mt19937_64& rng) {
  const char* levels[] = {"0", "1", "2", "3", "4", "5", "6", "w", "w+1", "w*2", "w^(2)"};
  const Rational eps[] = {Rational(1, 4), Rational(1, 2), Rational(9, 10)};
  for (int trial = 0; trial < 50; ++trial) {
    const char* tree = kTreePool[rng() % std::size(kTreePool)];
    TreeExpr T = blossom(O(tree));
    std::size_t off = 0, stride = 1;
    if (rng() % 2) {
      off = rng() % 3;
      stride = 1 + rng() % 3;
      T = full_subtree(T, off, stride);
    }
    const char* xi = levels[rng() % std::size(levels)];
    const Rational& e = eps[rng() % 3];
    // Windows up to 6 x 6 that fit under the FinTree node bound.
    std::size_t depth = 0, width = 0, nodes = max_fin_nodes() + 1;
    while (nodes > max_fin_nodes()) {
      depth = 3 + rng() % 4;
      width = 3 + rng() % 4;
      nodes = 0;
      for (std::size_t h = 0, layer = 1; h <= depth; ++h, layer *= width) nodes += layer;
    }
    auto cert = level_set_certificate(build_model(T), e, O(xi), depth, width);
    t.check(cert.equal && cert.checked > 0, [&] {
      std::string s = std::string("blossom(") + tree + ") sel(" + std::to_string(off) + "," + std::to_string(stride) +
                      ") xi=" + xi + " eps=" + to_string(e);
      if (!cert.mismatches.empty()) s += " first mismatch " + to_string(cert.mismatches.front());
      return s;
    });
  }
}

void c4_ordinal_oracle(Tally& t, std::mt19937_64&) {
  std::vector<Ordinal> grid;
  for (unsigned long a = 0; a <= 3; ++a)
    for (unsigned long b = 0; b <= 3; ++b)
      for (unsigned long c = 0; c <= 3; ++c) grid.push_back(below_w3(a, b, c));
  for (const auto& a : grid)
    for (const auto& b : grid) {
      Ordinal s = add(a, b), so = order_type_oracle(a, b, OracleOp::add);
      t.check(s == so, [&] { return to_string(a) + " + " + to_string(b) + ": " + to_string(s) + " vs " + to_string(so); });
      Ordinal p = mul(a, b), po = order_type_oracle(a, b, OracleOp::mul);
      t.check(p == po, [&] { return to_string(a) + " * " + to_string(b) + ": " + to_string(p) + " vs " + to_string(po); });
    }
}

void c5_spoindex(Tally& t, std::mt19937_64&) {
  const char* pool[] = {"1",        "2",     "3",         "5",        "w",      "w+1",        "w+5",
                        "w*2",      "w*3+2", "w^(2)",     "w^(2)+1",  "w^(2)+w*3", "w^(2)*2", "w^(3)",
                        "w^(3)+w",  "w^(4)*2+1", "w^(w)", "w^(w)+w", "w^(w+1)", "w^(w*2)"};
  for (const char* xi : pool) {
    SpoIndexReport r = spoindex_check(blossom(O(xi)));
    Ordinal rho = successor(O(xi));
    Ordinal alpha = leading_alpha(rho);
    Ordinal lhs = mul(rho, Ordinal::omega());
    Ordinal rhs = omega_pow(successor(alpha));
    t.check(r.rho == rho && r.equal && r.rho_times_omega == lhs && lhs == rhs, [&] {
      return std::string("xi=") + xi + ": rho*w = " + to_string(r.rho_times_omega) + ", w^(alpha+1) = " + to_string(rhs);
    });
    unsigned long N = doubling_exponent(rho, alpha);
    auto bound = [&](unsigned long n) { return add(nat_mul(omega_pow(alpha), pow2(n)), 1UL); };
    bool fits = rho <= bound(N);
    bool minimal = N == 0 || !(rho <= bound(N - 1));
    t.check(fits && minimal, [&] { return std::string("xi=") + xi + ": doubling exponent " + std::to_string(N); });
  }
}

void c6_embedding(Tally& t, std::mt19937_64& rng) {
  TreeExpr target = blossom(6UL);
  std::size_t done = 0;
  while (done < 200) {
    FinTree f = random_fintree(rng, 2 + rng() % 30);
    auto ranks = leaf_stripping_ranks(f);
    if (ranks[f.root()] + 1 > 6) continue;
    ++done;
    TreeExpr s = to_expr(f);
    std::string why;
    try {
      why = check_embedding(s, target, embed(s, 6UL));
    } catch (const std::exception& e) {
      why = e.what();
    }
    t.check(why.empty(), [&] { return "tree of " + std::to_string(f.size()) + " nodes: " + why; });
  }
}

void c7_full_subtrees(Tally& t, std::mt19937_64& rng) {
  for (int trial = 0; trial < 20; ++trial) {
    const char* xi = kTreePool[trial % std::size(kTreePool)];
    std::size_t off = rng() % 4, stride = 1 + rng() % 3;
    TreeExpr T = blossom(O(xi));
    TreeExpr S = full_subtree(T, off, stride);
    Ordinal a = rank_tree(T), b = rank_tree(S);
    t.check(a == b && b == successor(O(xi)), [&] {
      return std::string("blossom(") + xi + ") sel(" + std::to_string(off) + "," + std::to_string(stride) + "): " +
             to_string(a) + " vs " + to_string(b);
    });
  }
}

void c8_james(Tally& t, std::mt19937_64& rng) {
  for (int trial = 0; trial < 100; ++trial) {
    FinTree f = random_fintree(rng, 3 + rng() % 12);
    TreeExpr T = to_expr(f);
    auto nodes = omega_code(f);
    for (int k = 0; k < 2; ++k) {
      SuppVec v = random_vector(rng, T, nodes, 1 + rng() % 8);
      Rational bb = james_norm(v).squared, ex = james_squared_exhaustive(v);
      t.check(bb == ex, [&] { return "branch-and-bound " + to_string(bb) + " vs exhaustive " + to_string(ex); });
    }
  }
  for (int trial = 0; trial < 500; ++trial) {
    FinTree f = random_fintree(rng, 2 + rng() % 20);
    TreeExpr T = to_expr(f);
    auto nodes = omega_code(f);
    SuppVec v = random_vector(rng, T, nodes, 1 + rng() % 10);
    Rational sup = 0, l1 = 0;
    for (const auto& [node, x] : v.entries()) {
      sup = std::max(sup, abs(x));
      l1 += abs(x);
    }
    Rational j2 = james_norm(v).squared;
    ChainCheck c = chain_inequality_check(v);
    t.check(c.holds && sup * sup <= j2 && j2 <= l1 * l1,
            [&] { return "chain inequality: sup " + to_string(sup) + ", J^2 " + to_string(j2) + ", l1 " + to_string(l1); });
  }
  TreeExpr T = blossom(3UL);
  auto nodes = truncate(T, 3, 3).paths;
  for (int trial = 0; trial < 100; ++trial) {
    SuppVec v = random_vector(rng, T, nodes, 2 + rng() % 7);
    v.set({}, 0);
    Rational sum = 0;
    for (std::size_t k = 0; k < 3; ++k) sum += james_squared_exhaustive(v.restricted_to_cone({k}));
    Rational j2 = james_norm(v).squared;
    t.check(j2 == sum, [&] { return "decoupling: J^2 " + to_string(j2) + " vs branch sum " + to_string(sum); });
  }
}

void c9_factorization(Tally& t, std::mt19937_64& rng) {
  for (int trial = 0; trial < 200; ++trial) {
    FinTree R = random_fintree(rng, 1 + rng() % 12);
    auto e = random_subtree_embedding(rng, R);
    auto f = subtree_factorization(e.source, R, e.phi);
    bool same = f.composition.rows() == e.source.size() && f.composition.cols() == e.source.size();
    for (std::size_t a = 0; same && a < e.source.size(); ++a)
      for (std::size_t b = 0; b < e.source.size(); ++b)
        if (f.composition(a, b) != (ancestor_or_self(e.source, b, a) ? 1 : 0)) same = false;
    t.check(same && f.equal, [&] {
      return "composition differs from Sigma_S for |S|=" + std::to_string(e.source.size()) +
             ", |T|=" + std::to_string(R.size());
    });
  }
  for (int trial = 0; trial < 200; ++trial) {
    FinTree R = random_fintree(rng, 1 + rng() % 10);
    NormTag space = trial % 2 ? NormTag::l1 : NormTag::sup;
    auto inst = random_factorable(rng, R, space);
    std::string why = witness_pattern_failure(R, inst.witness);
    if (why.empty()) {
      try {
        auto fac = witness_to_factorization(R, inst.witness, inst.top, inst.vstar);
        RatMatrix comp = fac.V.m * inst.top.m * fac.U.m;
        for (std::size_t a = 0; why.empty() && a < R.size(); ++a)
          for (std::size_t b = 0; b < R.size(); ++b)
            if (comp(a, b) != (ancestor_or_self(R, b, a) ? 1 : 0)) {
              why = "V T U differs from Sigma_T at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
              break;
            }
        if (why.empty()) {
          Witness back = factorization_to_witness(R, fac.U, fac.V, inst.top);
          why = witness_pattern_failure(R, back);
          Rational need = 1 / (operator_norm(fac.U) * operator_norm(fac.V));
          if (why.empty() && back.delta < need) why = "delta " + to_string(back.delta) + " below " + to_string(need);
        }
      } catch (const std::exception& ex) {
        why = ex.what();
      }
    }
    t.check(why.empty(), [&] { return "roundtrip on " + std::to_string(R.size()) + " nodes: " + why; });
  }
}

void c10_lower_margins(Tally& t, std::uint64_t seed) {
  std::map<NormTag, int> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    FdInstance inst = random_fd_instance(seed * 1000003ULL + i, 6);
    ++seen[inst.model.norm];
    LowerLemmaReport r = run_lower_instance(inst, 200);
    bool ok = r.preconditions_ok && (r.exact ? r.margin_exact >= 0 : r.margin >= -1e-9);
    t.check(ok, [&] {
      std::ostringstream s;
      s << "instance seed " << inst.seed << " (" << to_string(inst.model.norm) << ", d=" << inst.model.dim
        << "): margin " << r.margin;
      if (!r.failures.empty()) s << ", " << r.failures.front();
      return s.str();
    });
  }
  t.check(seen.size() == 3, [] { return std::string("not every norm was drawn"); });
}

void c11_kk_bounds(Tally& t, std::uint64_t seed) {
  const double c = std::sqrt(2.0);
  for (std::uint64_t i = 0; i < 500; ++i) {
    KkInstance inst = random_kk_instance(seed * 7919ULL + i, 6);
    DVec x = to_double(inst.xstar);
    double base = norm_of(x, inst.model.dual_norm());
    double v = kk_norm(inst.model, x, inst.chain, c);
    t.check(base - 1e-12 <= v && v <= c * base + 1e-12, [&] {
      std::ostringstream s;
      s << "instance " << i << ": |x*| = " << base << ", kk = " << v;
      return s.str();
    });
  }
}

void c12_cb_dichotomy(Tally& t, std::mt19937_64& rng) {
  for (int trial = 0; trial < 20; ++trial) {
    const char* xi = kTreePool[trial % std::size(kTreePool)];
    TreeExpr T = blossom(O(xi));
    if (trial >= static_cast<int>(std::size(kTreePool))) T = full_subtree(T, rng() % 3, 1 + rng() % 3);
    Ordinal cb = cb_rank(T), r = rank_tree(T);
    t.check(cb == r, [&] { return std::string("blossom(") + xi + "): cb " + to_string(cb) + " vs " + to_string(r); });
  }
  for (int trial = 0; trial < 20; ++trial) {
    FinTree f = random_fintree(rng, 2 + rng() % 20);
    TreeExpr T = to_expr(f);
    Ordinal cb = cb_rank(T), r = rank_tree(T);
    t.check(cb == 1UL && r != 1UL, [&] {
      return "finite tree of " + std::to_string(f.size()) + " nodes: cb " + to_string(cb) + ", rank " + to_string(r);
    });
  }
}

struct CriterionInfo {
  const char* title;
  double limit;
  std::function<void(Tally&, std::mt19937_64&, std::uint64_t)> run;
};

const CriterionInfo& criterion_info(int id) {
  static const std::vector<CriterionInfo> infos = {
      {"blossom ranks", 5, [](Tally& t, std::mt19937_64& r, std::uint64_t) { c1_blossom_ranks(t, r); }},
      {"szlenk model index", 5, [](Tally& t, std::mt19937_64& r, std::uint64_t) { c2_szlenk_model(t, r); }},
      {"level sets", 0, [](Tally& t, std::mt19937_64& r, std::uint64_t) { c3_level_sets(t, r); }},
      {"ordinal oracle", 30, [](Tally& t, std::mt19937_64& r, std::uint64_t) { c4_ordinal_oracle(t, r); }},
      {"index arithmetic", 0, [](Tally& t, std::mt19937_64& r, std::uint64_t) { c5_spoindex(t, r); }},
      {"embedding", 10, [](Tally& t, std::mt19937_64& r, std::uint64_t) { c6_embedding(t, r); }},
      {"full subtrees", 0, [](Tally& t, std::mt19937_64& r, std::uint64_t) { c7_full_subtrees(t, r); }},
      {"james norm", 60, [](Tally& t, std::mt19937_64& r, std::uint64_t) { c8_james(t, r); }},
      {"factorization", 0, [](Tally& t, std::mt19937_64& r, std::uint64_t) { c9_factorization(t, r); }},
      {"lower bound margins", 60, [](Tally& t, std::mt19937_64&, std::uint64_t s) { c10_lower_margins(t, s); }},
      {"renorming bounds", 0, [](Tally& t, std::mt19937_64&, std::uint64_t s) { c11_kk_bounds(t, s); }},
      {"cb dichotomy", 0, [](Tally& t, std::mt19937_64& r, std::uint64_t) { c12_cb_dichotomy(t, r); }},
  };
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  return infos[static_cast<std::size_t>(id - 1)];
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  const CriterionInfo& s = criterion_info(id);
  CriterionResult r;
  r.id = id;
  r.title = s.title;
  r.limit_seconds = s.limit;
  Tally t;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(id));
  auto start = std::chrono::steady_clock::now();
  try {
    s.run(t, rng, seed);
  } catch (const std::exception& e) {
    ++t.failures;
    if (t.first.empty()) t.first = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.cases = t.cases;
  r.pass = t.failures == 0;
  if (!r.pass) {
    r.detail = std::to_string(t.failures) + " failing, first: " + t.first;
  } else if (s.limit > 0 && r.seconds >= s.limit) {
    r.pass = false;
    r.detail = "runtime over the " + std::to_string(static_cast<int>(s.limit)) + " s bound";
  }
  return r;
}

std::vector<int> criteria_for_module(const std::string& module) {
  static const std::map<std::string, std::vector<int>> table = {
      {"ordinal", {4, 5}}, {"tree", {1, 6, 7}},      {"topology", {12}}, {"vectors", {8}},
      {"factor", {9}},     {"szlenk", {2, 3, 5}},    {"fdlab", {10, 11}}};
  auto it = table.find(module);
  if (it == table.end()) throw std::invalid_argument("unknown module '" + module + "'");
  return it->second;
}

std::string format_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", r.seconds);
  std::string line = std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + ": " +
                     std::to_string(r.cases) + " cases, " + buf;
  if (!r.detail.empty()) line += " (" + r.detail + ")";
  return line;
}

}  // namespace szt::verify
