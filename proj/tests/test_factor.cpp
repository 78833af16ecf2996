#include "doctest.h"

#include "generators.hpp"
#include "oracles.hpp"
#include "szt/factor.hpp"

#include <random>

using namespace szt;

namespace {

FinTree chain2() { return FinTree({FinTree::npos, 0}); }

}  // namespace

TEST_CASE("norms and operator norms") {
  std::vector<Rational> v{Rational(3), Rational(-4)};
  CHECK(vec_norm(v, NormTag::l1) == 7);
  CHECK(vec_norm(v, NormTag::sup) == 4);
  CHECK(vec_norm(v, NormTag::l2) == 5);
  CHECK_THROWS_AS(vec_norm({Rational(1), Rational(1)}, NormTag::l2), std::domain_error);
  CHECK(norm_at_most({Rational(1), Rational(1)}, NormTag::l2, Rational(3, 2)));
  CHECK_FALSE(norm_at_most({Rational(1), Rational(1)}, NormTag::l2, Rational(7, 5)));

  FinTree T({FinTree::npos, 0, 0, 1});
  RatOperator sig{sigma_matrix(T), NormTag::l1, NormTag::sup};
  CHECK(operator_norm(sig) == 1);
  RatOperator odd{sigma_matrix(T), NormTag::sup, NormTag::l1};
  CHECK_THROWS_AS(operator_norm(odd), std::domain_error);
  CHECK(parse_norm_tag("linf") == NormTag::sup);
  CHECK_THROWS_AS(parse_norm_tag("l3"), std::invalid_argument);
}

TEST_CASE("verify_witness") {
  FinTree T({FinTree::npos, 0, 0, 1, 1});
  Witness w = canonical_witness(T);
  CHECK(verify_witness(T, w).valid);

  Witness bad = w;
  bad.xstar[2][1] = Rational(1, 7);
  auto rep = verify_witness(T, bad);
  CHECK_FALSE(rep.valid);
  CHECK(rep.t == 2);
  CHECK(rep.s == 1);

  Witness big = w;
  big.x[0][0] = 2;
  CHECK_FALSE(verify_witness(T, big).valid);
  Witness shortw = w;
  shortw.diag.pop_back();
  CHECK_THROWS_AS(verify_witness(T, shortw), std::invalid_argument);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    FinTree R = verify::random_fintree(rng, 1 + rng() % 8);
    for (auto tag : {NormTag::l1, NormTag::sup, NormTag::l2}) {
      Witness g = verify::random_witness(rng, R, tag);
      CHECK(verify::witness_pattern_failure(R, g).empty());
      CHECK(verify_witness(R, g).valid);
    }
  }
}

TEST_CASE("witness to factorization") {
  FinTree T({FinTree::npos, 0, 0, 2});
  Witness w = canonical_witness(T);
  RatOperator id{RatMatrix::identity(4), NormTag::l1, NormTag::l1};
  auto f = witness_to_factorization(T, w, id, w.xstar);
  CHECK(f.V.m * id.m * f.U.m == sigma_matrix(T));
  CHECK(operator_norm(f.U) <= 1 / w.delta);
  CHECK(operator_norm(f.V) <= 1);

  // Halving x halves delta and leaves the composition alone.
  Witness half = w;
  for (auto& x : half.x)
    for (auto& c : x) c /= 2;
  for (auto& d : half.diag) d /= 2;
  half.delta /= 2;
  auto g = witness_to_factorization(T, half, id, half.xstar);
  CHECK(g.V.m * id.m * g.U.m == sigma_matrix(T));
  CHECK(g.U.m == f.U.m);
  CHECK(operator_norm(g.U) <= 1 / half.delta);

  // v_t* that does not lift x_t*.
  auto wrong = w.xstar;
  wrong[1][0] = 0;
  CHECK_THROWS_AS(witness_to_factorization(T, w, id, wrong), std::invalid_argument);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    FinTree R = verify::random_fintree(rng, 8);
    auto inst = verify::random_factorable(rng, R, NormTag::l1);
    auto fac = witness_to_factorization(R, inst.witness, inst.top, inst.vstar);
    CHECK(fac.V.m * inst.top.m * fac.U.m == sigma_matrix(R));
    CHECK(operator_norm(fac.U) <= 1 / inst.witness.delta);
    CHECK(operator_norm(fac.V) <= 1);
  }
}

TEST_CASE("lift_functionals") {
  RatOperator top{RatMatrix::from_rows({{Rational(1), Rational(0)}, {Rational(0), Rational(2)}, {Rational(0), Rational(0)}}),
                  NormTag::l1, NormTag::sup};
  auto v = lift_functionals(top, {{Rational(1), Rational(1)}});
  REQUIRE(v);
  CHECK((*v)[0] == std::vector<Rational>{Rational(1), Rational(1, 2), Rational(0)});

  RatOperator flat{RatMatrix::from_rows({{Rational(1), Rational(1)}}), NormTag::l1, NormTag::sup};
  CHECK_FALSE(lift_functionals(flat, {{Rational(1), Rational(0)}}));

  // Among all lifts the returned one has the least Euclidean length.
  RatOperator wide{RatMatrix::from_rows({{Rational(1)}, {Rational(1)}}), NormTag::l1, NormTag::sup};
  auto u = lift_functionals(wide, {{Rational(1)}});
  REQUIRE(u);
  CHECK((*u)[0] == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("factorization to witness") {
  FinTree c2 = chain2();
  RatOperator U{RatMatrix::identity(2), NormTag::l1, NormTag::l1};
  RatOperator V{RatMatrix::identity(2), NormTag::sup, NormTag::sup};
  RatOperator top{sigma_matrix(c2), NormTag::l1, NormTag::sup};
  Witness w = factorization_to_witness(c2, U, V, top);
  CHECK(w.delta == 1);
  CHECK(verify_witness(c2, w).valid);

  RatOperator off{RatMatrix::identity(2), NormTag::l1, NormTag::sup};
  CHECK_THROWS_WITH_AS(factorization_to_witness(c2, U, V, off), doctest::Contains("e_0"), std::invalid_argument);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    FinTree R = verify::random_fintree(rng, 1 + rng() % 10);
    auto inst = verify::random_factorable(rng, R, trial % 2 ? NormTag::l1 : NormTag::sup);
    auto fac = witness_to_factorization(R, inst.witness, inst.top, inst.vstar);
    Witness back = factorization_to_witness(R, fac.U, fac.V, inst.top);
    CHECK(verify_witness(R, back).valid);
    CHECK(verify::witness_pattern_failure(R, back).empty());
    CHECK(back.delta * operator_norm(fac.U) * operator_norm(fac.V) == 1);
  }
}

TEST_CASE("subtree factorization") {
  FinTree T({FinTree::npos, 0, 0, 1, 1, 2});
  std::vector<std::size_t> id{0, 1, 2, 3, 4, 5};
  auto same = subtree_factorization(T, T, id);
  CHECK(same.equal);
  for (const auto* op : {&same.A, &same.U, &same.V, &same.B}) CHECK(operator_norm(*op) == 1);

  auto two = subtree_factorization(chain2(), T, {1, 4});
  CHECK(two.equal);
  CHECK_THROWS_WITH_AS(subtree_factorization(chain2(), T, {1, 5}), doctest::Contains("(0, 1)"), std::invalid_argument);
  CHECK_THROWS_AS(subtree_factorization(chain2(), T, {1, 1}), std::invalid_argument);

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    FinTree R = verify::random_fintree(rng, 1 + rng() % 12);
    auto e = verify::random_subtree_embedding(rng, R);
    auto f = subtree_factorization(e.source, R, e.phi);
    CHECK(f.equal);
    for (const auto* op : {&f.A, &f.U, &f.V, &f.B}) {
      CHECK(operator_norm(*op) == 1);
      for (std::size_t i = 0; i < op->rows(); ++i)
        for (std::size_t j = 0; j < op->cols(); ++j) CHECK((op->m(i, j) == 0 || op->m(i, j) == 1));
    }
  }
}

TEST_CASE("glued branch witnesses") {
  std::vector<FinTree> fam{chain2(), FinTree({FinTree::npos, 0, 0})};
  GluedTree G = glue(fam);
  CHECK(G.tree.size() == 4);
  CHECK(G.branches == 2);
  CHECK(G.branch[1] == 0);
  CHECK(G.branch[3] == 1);
  CHECK_FALSE(G.tree.leq(1, 2));

  BranchWitness w = canonical_branch_witness(G, {Rational(1, 2), Rational(1, 3)});
  CHECK(verify_branch_witness(G, w).valid);

  BranchWitness tight = canonical_branch_witness(G, {Rational(1, 2), Rational(1)});
  auto rep = verify_branch_witness(G, tight);
  CHECK_FALSE(rep.valid);
  CHECK(rep.branch == 1);

  BranchWitness few = w;
  few.thresholds.pop_back();
  CHECK_THROWS_AS(verify_branch_witness(G, few), std::invalid_argument);

  // Deeper random families.
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FinTree> f;
    for (std::size_t b = 0; b < 1 + rng() % 4; ++b) f.push_back(verify::random_fintree(rng, 1 + rng() % 5));
    GluedTree g = glue(f);
    std::size_t expect = 1;
    for (const auto& t : f) expect += t.size() - 1;
    CHECK(g.tree.size() == expect);
    for (std::size_t a = 1; a < g.tree.size(); ++a)
      for (std::size_t b = 1; b < g.tree.size(); ++b) {
        bool same_branch = g.branch[a] == g.branch[b];
        CHECK(g.tree.leq(a, b) == (same_branch && f[g.branch[a]].leq(g.local[a], g.local[b])));
      }
    std::vector<Rational> th(f.size(), Rational(9, 10));
    CHECK(verify_branch_witness(g, canonical_branch_witness(g, th)).valid);
  }
}

TEST_CASE("basis constants") {
  auto e = [](std::size_t d, std::size_t i) {
    std::vector<Rational> v(d, Rational(0));
    v[i] = 1;
    return v;
  };
  CHECK(basis_constant({e(3, 0), e(3, 1), e(3, 2)}, NormTag::l1) == 1);
  CHECK(basis_constant({e(3, 0), e(3, 1), e(3, 2)}, NormTag::sup) == 1);

  // The summing basis in sup norm: projections onto leading blocks have norm 2.
  std::vector<std::vector<Rational>> summing;
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<Rational> v(4, Rational(0));
    for (std::size_t i = 0; i < k; ++i) v[i] = 1;
    summing.push_back(v);
  }
  CHECK(basis_constant(summing, NormTag::sup) == 2);
  // In l1 the same vectors give m - 1, hit at y = e_4.
  CHECK(basis_constant(summing, NormTag::l1) == 3);
  // Differences e_1, e_2 - e_1, ... are monotone in l1.
  std::vector<std::vector<Rational>> diffs{e(3, 0)};
  for (std::size_t k = 1; k < 3; ++k) {
    auto v = e(3, k);
    v[k - 1] = -1;
    diffs.push_back(v);
  }
  CHECK(basis_constant(diffs, NormTag::l1) == 1);
  CHECK_THROWS_AS(basis_constant({e(2, 0), e(2, 0)}, NormTag::l1), std::invalid_argument);

  // The canonical witness vectors in a compatible order.
  FinTree T({FinTree::npos, 0, 0, 1, 2, 2});
  auto order = compatible_order(T);
  CHECK(order.size() == T.size());
  Witness w = canonical_witness(T);
  std::vector<std::vector<Rational>> seq;
  for (auto i : order) seq.push_back(w.x[i]);
  CHECK(basis_constant(seq, NormTag::l1) <= Rational(101, 100));
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b) CHECK_FALSE(T.leq(order[b], order[a]));
}
