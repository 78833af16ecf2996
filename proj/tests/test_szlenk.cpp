#include "doctest.h"

#include "szt/szlenk.hpp"

#include <random>

using namespace szt;

namespace {

Ordinal O(const char* s) { return parse_ordinal(s); }

const Rational half(1, 2);

}  // namespace

TEST_CASE("build_model") {
  DualModel leaf = build_model(TreeExpr::leaf());
  CHECK(leaf.separation_checked == 1);
  CHECK(model_point(TreeExpr::leaf(), {}).empty());

  TreeExpr b1 = blossom(1UL);
  for (std::size_t n = 0; n < 4; ++n)
    for (std::size_t m = 0; m < 4; ++m)
      if (n != m) CHECK(sup_norm(model_point(b1, {n}) - model_point(b1, {m})) == 1);

  DualModel bw = build_model(blossom(O("w")));
  CHECK(bw.separation_checked == 20);
  CHECK_THROWS_AS(build_model(star(blossom(O("w")))), std::invalid_argument);
}

TEST_CASE("szlenk_derive") {
  DualModel b1 = build_model(blossom(1UL));
  DualModel d = szlenk_derive(b1, half);
  CHECK(d.survivors.contains({}));
  CHECK_FALSE(d.survivors.contains({0}));
  CHECK_FALSE(d.survivors.empty());
  CHECK(szlenk_derive(d, half).survivors.empty());

  CHECK(szlenk_derive(b1, 2).survivors.empty());
  DualModel empty = szlenk_derive(b1, 2);
  CHECK(szlenk_derive(empty, half).survivors.empty());
  CHECK_THROWS_AS(szlenk_derive(b1, 0), std::invalid_argument);
  CHECK_THROWS_AS(szlenk_derive(b1, Rational(-1, 3)), std::invalid_argument);
}

TEST_CASE("szlenk_index") {
  for (const char* s : {"0", "1", "w", "w^(2)", "w*2+3", "w^(w)"}) {
    DualModel m = build_model(blossom(O(s)));
    CHECK(szlenk_index(m, half) == successor(O(s)));
    CHECK(szlenk_index(m, Rational(99, 100)) == successor(O(s)));
    CHECK(szlenk_index(m, Rational(3, 2)) == 1UL);
    CHECK(szlenk_index(m, 1) == 1UL);
  }
  CHECK(szlenk_index(build_model(TreeExpr::leaf()), 7) == 1UL);

  // Index drops by one per derivation, and equals the number of steps to
  // empty on finite stretches.
  DualModel m = build_model(blossom(4UL));
  for (unsigned long k = 5; k > 0; --k) {
    CHECK(szlenk_index(m, half) == k);
    m = szlenk_derive(m, half);
  }
  CHECK(m.survivors.empty());
  CHECK(szlenk_index(m, half) == 0UL);

  // Computed indices are successors.
  for (const char* s : {"w+1", "w^(2)*3", "w^(3)+w"}) CHECK(is_successor(szlenk_index(build_model(blossom(O(s))), half)));

  // Finite trees collapse in one step for every eps.
  TreeExpr fin = chain_tree(4);
  CHECK(szlenk_index(build_model(fin), half) == 1UL);
  CHECK(rank_tree(fin) == 4UL);
}

TEST_CASE("monotonicity") {
  std::vector<Rational> eps{Rational(1, 4), half, Rational(9, 10), 1, Rational(3, 2)};
  std::vector<Ordinal> xis{0UL, 1UL, 2UL, O("w"), O("w+1"), O("w*2")};
  TreeExpr T = blossom(O("w*2+1"));
  DualModel m = build_model(T);
  auto window = truncate(T, 3, 3).paths;
  auto at = [&](const Rational& e, const Ordinal& xi) {
    DualModel cur = m;
    if (xi.is_zero()) return cur.survivors;
    if (e >= 1) return szlenk_derive(cur, e).survivors;
    return level_set(cur, e, xi);
  };
  for (std::size_t i = 0; i < eps.size(); ++i)
    for (std::size_t j = 0; j < xis.size(); ++j) {
      Subspace s = at(eps[i], xis[j]);
      for (std::size_t i2 = i; i2 < eps.size(); ++i2)
        for (std::size_t j2 = j; j2 < xis.size(); ++j2) {
          Subspace smaller = at(eps[i2], xis[j2]);
          for (const auto& p : window)
            if (smaller.contains(p)) CHECK(s.contains(p));
        }
    }
}

TEST_CASE("level sets") {
  DualModel b2 = build_model(blossom(2UL));
  auto c = level_set_certificate(b2, half, 1UL, 4, 4);
  CHECK(c.equal);
  CHECK(c.checked > 10);
  Subspace zero = level_set(b2, half, 0UL);
  for (const auto& p : truncate(blossom(2UL), 3, 3).paths) CHECK(zero.contains(p));

  DualModel bw = build_model(blossom(O("w")));
  Subspace top = level_set(bw, half, O("w"));
  CHECK(top.contains({}));
  for (const auto& p : truncate(blossom(O("w")), 3, 5).paths)
    if (!p.empty()) CHECK_FALSE(top.contains(p));
  CHECK_THROWS_AS(level_set(bw, 1, 1UL), std::invalid_argument);

  std::mt19937_64 rng(61);
  const char* pool[] = {"3", "5", "w", "w+2", "w*2", "w^(2)", "w^(2)+w*3"};
  for (int trial = 0; trial < 20; ++trial) {
    TreeExpr T = blossom(O(pool[rng() % 7]));
    if (rng() % 2) T = full_subtree(T, rng() % 3, 1 + rng() % 2);
    Ordinal xi = rng() % 3 == 0 ? O("w") : Ordinal(rng() % 5);
    CHECK(level_set_certificate(build_model(T), half, xi, 4, 4).equal);
  }
}

TEST_CASE("trace") {
  DualModel m = build_model(blossom(O("w")));
  auto tr = trace(m, half, O("w+1"));
  REQUIRE_FALSE(tr.empty());
  CHECK(tr.front().xi == 0UL);
  CHECK(tr.front().survivors == "T");
  CHECK(tr.back().xi == O("w"));
  CHECK(tr.back().removed_sample == std::vector<NodeId>{{}});
  for (std::size_t i = 1; i < tr.size(); ++i) CHECK(tr[i - 1].xi < tr[i].xi);

  auto big = trace(m, 2, O("w+1"));
  REQUIRE(big.size() == 2);
  CHECK(big[1].survivors == "empty");
}

TEST_CASE("spoindex_check") {
  auto w = spoindex_check(blossom(O("w")));
  CHECK(w.rho == O("w+1"));
  CHECK(w.alpha == 1UL);
  CHECK(w.rho_times_omega == O("w^(2)"));
  CHECK(w.equal);
  CHECK(w.rho_successor);
  CHECK(w.rho_above_omega_alpha);
  CHECK(w.model_lower_bound == w.rho);

  auto one = spoindex_check(blossom(1UL));
  CHECK(one.rho == 2UL);
  CHECK(one.alpha == 0UL);
  CHECK(one.rho_times_omega == O("w"));

  CHECK(spoindex_check(blossom(O("w^(2)*3"))).rho_times_omega == O("w^(3)"));
  CHECK_THROWS_AS(spoindex_check(chain_tree(3)), std::invalid_argument);
  CHECK_THROWS_AS(spoindex_check(TreeExpr::node(ChildGen::of_items({blossom(O("w"))}))), std::invalid_argument);
}

TEST_CASE("halving_schedule") {
  auto a = halving_schedule(O("w+1"), 1, 2);
  CHECK(a.epsilon == Rational(1, 8));
  CHECK(a.level == O("w*4+1"));
  auto b = halving_schedule(O("w^(2)+3"), Rational(2, 3), 0);
  CHECK(b.epsilon == Rational(1, 3));
  CHECK(b.level == O("w^(2)+3"));
  auto c = halving_schedule(1UL, 1, 3);
  CHECK(c.epsilon == Rational(1, 16));
  CHECK(c.level == 8UL);
  CHECK_THROWS_AS(halving_schedule(1UL, 0, 1), std::invalid_argument);
}
