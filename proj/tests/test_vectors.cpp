#include "doctest.h"

#include "oracles.hpp"
#include "szt/fintree.hpp"
#include "szt/vectors.hpp"

#include <random>
#include <set>

using namespace szt;

namespace {

Ordinal O(const char* s) { return parse_ordinal(s); }

Rational random_rational(std::mt19937_64& rng) {
  long p = static_cast<long>(rng() % 11) - 5;
  long q = static_cast<long>(rng() % 4) + 1;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

SuppVec random_vector(std::mt19937_64& rng, const TreeExpr& T, const std::vector<NodeId>& nodes, std::size_t k) {
  SuppVec v(T);
  for (std::size_t i = 0; i < k; ++i) v.set(nodes[rng() % nodes.size()], random_rational(rng));
  return v;
}

}  // namespace

TEST_CASE("l1 norm") {
  TreeExpr T = blossom(O("w"));
  CHECK(l1_norm(SuppVec::unit(T, {3})) == 1);
  CHECK(l1_norm(SuppVec(T)) == 0);
  CHECK(l1_norm(SuppVec::unit(T, {1}, 2) - SuppVec::unit(T, {2}, 3)) == 5);
  CHECK_THROWS_AS(SuppVec::unit(T, {0, 0}), std::out_of_range);
}

TEST_CASE("sigma_apply") {
  TreeExpr T = blossom(3UL);
  StepFn f = sigma_apply(SuppVec::unit(T, {1}));
  CHECK(f.eval({1}) == 1);
  CHECK(f.eval({1, 4, 2}) == 1);
  CHECK(f.eval({}) == 0);
  CHECK(f.eval({2, 1}) == 0);
  CHECK(sigma_apply(SuppVec(T)) == StepFn::zero(T));

  StepFn g = sigma_apply(SuppVec::unit(T, {1}) - SuppVec::unit(T, {1, 2}));
  Truncation tr = truncate(T, 3, 4);
  for (const auto& p : tr.paths) {
    Rational expect = (leq({1}, p) && !leq({1, 2}, p)) ? 1 : 0;
    CHECK(g.eval(p) == expect);
  }
  // The regions partition the tree.
  for (const auto& p : tr.paths) {
    int hits = 0;
    for (const auto& r : g.regions()) {
      bool in = leq(r.apex, p);
      for (const auto& e : r.excluded) in = in && !leq(e, p);
      if (in) {
        ++hits;
        CHECK(r.value == g.eval(p));
      }
    }
    CHECK(hits == 1);
  }
}

TEST_CASE("sup norm and sigma0") {
  TreeExpr T = blossom(O("w"));
  CHECK(sup_norm(sigma_apply(SuppVec::unit(T, {4}))) == 1);
  CHECK(sup_norm(sigma_apply(SuppVec::unit(T, {4}) + SuppVec::unit(T, {4, 1}))) == 2);
  CHECK(sup_norm(sigma_apply(SuppVec::unit(T, {4}) - SuppVec::unit(T, {4}))) == 0);

  StepFn f = sigma0_apply(SuppVec::unit(T, {2}));
  CHECK(f == sigma_apply(SuppVec::unit(T, {2})));
  CHECK(f.eval({}) == 0);
  CHECK_THROWS_AS(sigma0_apply(SuppVec::unit(T, {})), std::invalid_argument);
}

TEST_CASE("linearity and norm one") {
  TreeExpr T = blossom(O("w^(2)"));
  auto nodes = truncate(T, 3, 3).paths;
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    SuppVec v = random_vector(rng, T, nodes, 5), w = random_vector(rng, T, nodes, 5);
    Rational a = random_rational(rng), b = random_rational(rng);
    CHECK(sigma_apply(a * v + b * w) == a * sigma_apply(v) + b * sigma_apply(w));
    CHECK(sup_norm(sigma_apply(v)) <= l1_norm(v));
  }
}

TEST_CASE("james norm examples") {
  TreeExpr T = blossom(O("w"));
  auto one = james_norm(SuppVec::unit(T, {3}));
  CHECK(one.squared == 1);
  CHECK(one.value.exact);
  auto anti = james_norm(SuppVec::unit(T, {3}) + SuppVec::unit(T, {4}));
  CHECK(anti.squared == 2);
  CHECK_FALSE(anti.value.exact);
  CHECK(anti.value.lo <= 1.4142135623730951);
  CHECK(anti.value.hi >= 1.4142135623730950);
  auto chain = james_norm(SuppVec::unit(T, {3}) + SuppVec::unit(T, {3, 1}));
  CHECK(chain.squared == 4);
  CHECK(chain.family.size() == 1);

  SuppVec big(T);
  for (std::size_t k = 0; k < 15; ++k) big.set({k}, 1);
  CHECK_THROWS_AS(james_norm(big), std::invalid_argument);
}

TEST_CASE("james norm against the exhaustive oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    FinTree f = verify::random_fintree(rng, 3 + rng() % 10);
    TreeExpr T = to_expr(f);
    auto nodes = omega_code(f);
    SuppVec v = random_vector(rng, T, nodes, 1 + rng() % 8);
    CHECK(james_norm(v).squared == verify::james_squared_exhaustive(v));
  }
}

TEST_CASE("james norm is a norm") {
  TreeExpr T = blossom(3UL);
  auto nodes = truncate(T, 3, 3).paths;
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    SuppVec v = random_vector(rng, T, nodes, 4), w = random_vector(rng, T, nodes, 4);
    Rational c = random_rational(rng);
    CHECK(james_norm(c * v).squared == c * c * james_norm(v).squared);
    // Triangle inequality on enclosures: J(v+w) <= J(v) + J(w).
    double lhs = james_norm(v + w).value.lo;
    double rhs = james_norm(v).value.hi + james_norm(w).value.hi;
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("chain inequality") {
  TreeExpr T = blossom(O("w"));
  auto e = chain_inequality_check(SuppVec::unit(T, {2}));
  CHECK(e.holds);
  CHECK(e.sup == 1);
  CHECK(e.james_squared == 1);
  CHECK(e.l1 == 1);
  auto c = chain_inequality_check(SuppVec::unit(T, {2}) + SuppVec::unit(T, {2, 0}));
  CHECK(c.sup == 2);
  CHECK(c.james_squared == 4);
  CHECK(c.l1 == 2);
}

TEST_CASE("separation and nets") {
  TreeExpr T = blossom(O("w"));
  std::vector<StepFn> chis;
  for (std::size_t k = 0; k < 3; ++k) chis.push_back(sigma_apply(SuppVec::unit(T, {k})));
  CHECK(eps_separated(chis, Rational(1, 2)));
  CHECK_FALSE(eps_separated(chis, Rational(1)));
  CHECK(eps_separated(std::vector<StepFn>{chis[0]}, Rational(5)));
  CHECK_FALSE(eps_separated(std::vector<StepFn>{chis[0], chis[0]}, Rational(1, 100)));
  CHECK_THROWS_AS(eps_separated(chis, Rational(1, 2), VecNorm::l1), std::invalid_argument);

  std::vector<SuppVec> pts{SuppVec::unit(T, {0}), SuppVec::unit(T, {1})};
  CHECK(delta_net_check(pts, pts, 0, VecNorm::l1));
  CHECK_FALSE(delta_net_check({SuppVec::unit(T, {1})}, {SuppVec::unit(T, {0})}, Rational(1, 2), VecNorm::l1));
  CHECK(delta_net_check({SuppVec::unit(T, {1})}, {SuppVec::unit(T, {0})}, 1, VecNorm::sup));

  // Against a brute-force distance table.
  std::mt19937_64 rng(31);
  auto nodes = truncate(T, 2, 3).paths;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<SuppVec> cand, targ;
    for (int i = 0; i < 3; ++i) cand.push_back(random_vector(rng, T, nodes, 2));
    for (int i = 0; i < 3; ++i) targ.push_back(random_vector(rng, T, nodes, 2));
    Rational delta(static_cast<long>(rng() % 6), 2);
    for (auto n : {VecNorm::l1, VecNorm::sup}) {
      bool expect = true;
      for (const auto& t : targ) {
        Rational best = -1;
        for (const auto& c : cand) {
          Rational d = 0;
          std::set<NodeId> keys;
          for (const auto& [k, x] : t.entries()) keys.insert(k);
          for (const auto& [k, x] : c.entries()) keys.insert(k);
          for (const auto& k : keys) {
            Rational diff = abs(t.get(k) - c.get(k));
            d = n == VecNorm::l1 ? Rational(d + diff) : std::max(d, diff);
          }
          if (best < 0 || d < best) best = d;
        }
        expect = expect && best <= delta;
      }
      CHECK(delta_net_check(cand, targ, delta, n) == expect);
    }
  }
}

TEST_CASE("branch decoupling") {
  std::mt19937_64 rng(37);
  TreeExpr T = blossom(3UL);
  auto nodes = truncate(T, 3, 3).paths;
  for (int trial = 0; trial < 60; ++trial) {
    SuppVec v = random_vector(rng, T, nodes, 7);
    v.set({}, 0);
    Rational sum = 0;
    for (std::size_t k = 0; k < 3; ++k) sum += verify::james_squared_exhaustive(v.restricted_to_cone({k}));
    CHECK(james_norm(v).squared == sum);
  }
}
