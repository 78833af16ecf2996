#include "doctest.h"

#include "oracles.hpp"
#include "szt/fintree.hpp"
#include "szt/tree.hpp"

#include <random>
#include <set>

using namespace szt;

namespace {

Ordinal O(const char* s) { return parse_ordinal(s); }

TreeExpr two_leaves() { return TreeExpr::node(ChildGen::of_items({TreeExpr::leaf(), TreeExpr::leaf()})); }

}  // namespace

TEST_CASE("leq and height") {
  CHECK(leq(NodeId{}, NodeId{3, 1}));
  CHECK_FALSE(leq(NodeId{0}, NodeId{1}));
  CHECK(leq(NodeId{2, 0}, NodeId{2, 0, 5}));
  CHECK(height(NodeId{}) == 0);
  CHECK(height(NodeId{0, 3}) == 2);
  CHECK(height(NodeId{7, 7, 7}) == 3);
  CHECK_THROWS_AS(leq(two_leaves(), NodeId{}, NodeId{2}), std::out_of_range);
  CHECK_THROWS_AS(height(two_leaves(), NodeId{0, 0}), std::out_of_range);
}

TEST_CASE("blossom construction") {
  CHECK(blossom(0UL).is_leaf());
  CHECK(rank_tree(blossom(O("w"))) == O("w+1"));
  CHECK(blossom(O("w")).child(3) == blossom(3UL));
  for (const char* s : {"1", "w", "w*2", "w^(2)"}) CHECK(rank_tree(blossom(O(s))) == add(O(s), 1UL));
  // Child ranks are non-decreasing under the canonical enumeration.
  for (const char* s : {"w", "w*2+3", "w^(2)", "w^(w)", "w^(w)*2+w"}) {
    TreeExpr t = blossom(O(s));
    for (std::size_t k = 0; k + 1 < 10; ++k) CHECK(t.child(k).root_rank() <= t.child(k + 1).root_rank());
  }
}

TEST_CASE("rank_node and rank_tree") {
  CHECK(rank_node(blossom(O("w^(2)")), {}) == O("w^(2)"));
  CHECK(rank_node(TreeExpr::leaf(), {}) == 0UL);
  CHECK(rank_node(blossom(O("w")), {4}) == 4UL);
  CHECK(rank_tree(TreeExpr::leaf()) == 1UL);
  CHECK(rank_tree(chain_tree(4)) == 4UL);
  CHECK_THROWS_AS(rank_node(two_leaves(), {2}), std::out_of_range);

  // Structural rank agrees with leaf stripping on every tree up to 64 nodes
  // drawn at random.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    FinTree f = verify::random_fintree(rng, 1 + trial % 64);
    auto expected = verify::leaf_stripping_ranks(f);
    TreeExpr e = to_expr(f);
    auto code = omega_code(f);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(rank_node(e, code[i]) == Ordinal(expected[i]));
  }
}

TEST_CASE("derive and is_max") {
  TreeExpr b2 = blossom(2UL);
  DerivedView d0 = derive(b2, 0UL);
  CHECK(d0.contains({0, 0}));
  DerivedView d2 = derive(b2, 2UL);
  CHECK(d2.contains({}));
  CHECK_FALSE(d2.contains({0}));
  TreeExpr bw = blossom(O("w"));
  CHECK(derive(bw, O("w")).contains({}));
  CHECK_FALSE(derive(bw, O("w")).contains({5}));
  CHECK(derive(bw, O("w+1")).empty());
  CHECK_FALSE(derive(bw, O("w")).empty());

  CHECK(is_max(b2, d0, {0, 0}));
  CHECK_FALSE(is_max(blossom(1UL), derive(blossom(1UL), 0UL), {}));
  CHECK(is_max(bw, derive(bw, 5UL), {5}));
  CHECK_THROWS_AS(is_max(bw, derive(bw, 6UL), {5}), std::invalid_argument);

  // Against iterated removal of maximal nodes on a full truncation.
  Truncation tr = truncate(b2, 3, 3);
  auto levels = verify::iterated_derivations(tr.tree);
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (std::size_t i = 0; i < tr.tree.size(); ++i)
      CHECK(levels[k][i] == derive(b2, Ordinal(k)).contains(tr.paths[i]));
}

TEST_CASE("enumerate_compatible") {
  auto chain = enumerate_compatible(chain_tree(3), 10);
  CHECK(chain == std::vector<NodeId>{{}, {0}, {0, 0}});
  CHECK(enumerate_compatible(two_leaves(), 10).front() == NodeId{});
  CHECK(enumerate_compatible(blossom(1UL), 4) == std::vector<NodeId>{{}, {0}, {1}, {2}});
  CHECK_THROWS_AS(enumerate_compatible(blossom(1UL), 0), std::invalid_argument);
  auto seq = enumerate_compatible(blossom(O("w")), 200);
  for (std::size_t l = 0; l < seq.size(); ++l)
    for (std::size_t m = 0; m < seq.size(); ++m)
      if (leq(seq[l], seq[m])) CHECK(l <= m);
}

TEST_CASE("induced_wellorder") {
  FinTree chain({FinTree::npos, 0, 1});
  CHECK(induced_wellorder(chain, {0, 1, 2}) == std::vector<std::size_t>{0, 1, 2});
  FinTree cherry({FinTree::npos, 0, 0});
  CHECK(induced_wellorder(cherry, {1, 2}) == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(induced_wellorder(cherry, {1}), std::invalid_argument);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    FinTree f = verify::random_fintree(rng, 12);
    std::vector<std::size_t> psi(f.size());
    for (auto& v : psi) v = rng() % f.size();
    for (std::size_t i = 0; i < f.size(); ++i) psi.push_back(i);
    auto order = induced_wellorder(f, psi);
    std::vector<std::size_t> pos(f.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (std::size_t s = 0; s < f.size(); ++s)
      for (std::size_t t = 0; t < f.size(); ++t)
        if (f.leq(s, t)) CHECK(pos[s] <= pos[t]);
  }
}

TEST_CASE("embed") {
  auto phi = embed(TreeExpr::leaf(), O("w"));
  CHECK(phi.size() == 1);
  CHECK(phi.at({}) == NodeId{});
  auto phi2 = embed(chain_tree(2), 1UL);
  CHECK(phi2.at({}) == NodeId{});
  CHECK(phi2.at({0}).size() == 1);
  CHECK(verify::check_embedding(chain_tree(2), blossom(1UL), phi2).empty());
  CHECK_THROWS_AS(embed(chain_tree(5), 3UL), std::invalid_argument);
  CHECK_THROWS_AS(embed(blossom(2UL), 3UL), std::invalid_argument);

  std::mt19937_64 rng(5);
  int done = 0;
  while (done < 200) {
    FinTree f = verify::random_fintree(rng, 2 + rng() % 20);
    TreeExpr s = to_expr(f);
    if (rank_tree(s) > 4UL) continue;
    ++done;
    auto emb = embed(s, 3UL);
    CHECK(verify::check_embedding(s, blossom(3UL), emb).empty());
  }
}

TEST_CASE("full_subtree") {
  CHECK(rank_tree(full_subtree(blossom(O("w")), 0, 2)) == O("w+1"));
  CHECK(full_subtree(blossom(O("w")), 0, 1) == blossom(O("w")));
  TreeExpr f = full_subtree(blossom(O("w^(2)")), 5, 3);
  CHECK(rank_tree(f) == O("w^(2)+1"));
  CHECK(f.child(0).root_rank() == fund_seq(O("w^(2)"), 5));
  CHECK(f.child(1).root_rank() == fund_seq(O("w^(2)"), 8));
  // The selection is applied again one level down.
  CHECK(f.child(0).child(0).root_rank() == fund_seq(fund_seq(O("w^(2)"), 5), 5));
  CHECK_FALSE(f.child(0).child_count().has_value());
  CHECK_THROWS_AS(full_subtree(two_leaves(), 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(full_subtree(blossom(O("w")), 0, 0), std::invalid_argument);
}

TEST_CASE("omega_code and truncate") {
  CHECK(omega_code(FinTree()) == std::vector<NodeId>{{}});
  CHECK(omega_code(FinTree({FinTree::npos, 0, 0})) == std::vector<NodeId>{{}, {0}, {1}});
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    FinTree f = verify::random_fintree(rng, 10);
    auto code = omega_code(f);
    std::set<NodeId> image(code.begin(), code.end());
    CHECK(image.size() == f.size());
    for (const auto& p : code)
      for (std::size_t k = 0; k < p.size(); ++k) CHECK(image.count(NodeId(p.begin(), p.begin() + k)) == 1);
  }

  CHECK(truncate(TreeExpr::leaf(), 4, 4).tree.size() == 1);
  Truncation t = truncate(blossom(O("w")), 1, 3);
  CHECK(t.tree.size() == 4);
  CHECK(t.elided[0]);

  Truncation b = truncate(blossom(2UL), 10, 2);
  auto ranks = verify::leaf_stripping_ranks(b.tree);
  for (std::size_t i = 0; i < b.tree.size(); ++i) CHECK(Ordinal(ranks[i]) == rank_node(blossom(2UL), b.paths[i]));
}

TEST_CASE("star") {
  CHECK(star(TreeExpr::leaf()).empty());
  CHECK_FALSE(star(blossom(1UL)).count().has_value());
  CHECK(star(blossom(1UL)).component(7).is_leaf());
  Forest f = star(blossom(O("w")));
  for (std::size_t n = 0; n < 5; ++n) CHECK(rank_tree(f.component(n)) == add(fund_seq(O("w"), n), 1UL));
}

TEST_CASE("dot export is stable") {
  std::string a = to_dot(blossom(2UL), 2, 2);
  CHECK(a == to_dot(blossom(2UL), 2, 2));
  CHECK(a.find("n0 -> n1;") != std::string::npos);
  CHECK(a.find("rank 2") != std::string::npos);
}
