#include "doctest.h"

#include "oracles.hpp"
#include "szt/topology.hpp"

#include <random>

using namespace szt;

namespace {

Ordinal O(const char* s) { return parse_ordinal(s); }

}  // namespace

TEST_CASE("wedge membership") {
  TreeExpr bw = blossom(O("w"));
  CHECK(wedge_member(bw, {{}, {}}, {4, 2, 1}));
  CHECK_FALSE(wedge_member(bw, {{3}, {{3, 1}}}, {3, 1}));
  CHECK(wedge_member(bw, {{}, {{0}, {1}}}, {2, 0}));
  CHECK_FALSE(wedge_member(bw, {{}, {{0}, {1}}}, {1, 0}));
  CHECK_THROWS_AS(wedge_member(bw, {{}, {{0, 1}}}, {2}), std::invalid_argument);

  auto nb = parse_wedge("t=[];exclude=[0],[1]");
  CHECK(nb.apex.empty());
  CHECK(nb.excluded == std::vector<NodeId>{{0}, {1}});
  CHECK(to_string(nb) == "t=[];exclude=[0],[1]");
  CHECK(parse_wedge("t=[2,5]").apex == NodeId{2, 5});
  CHECK_THROWS_AS(parse_wedge("x=[]"), std::invalid_argument);

  // W(t,F1) and W(t,F2) intersect in W(t,F1 u F2).
  TreeExpr deep = blossom(O("w^(2)+w*5"));
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    NodeId t{rng() % 3};
    WedgeNbhd a{t, {}}, b{t, {}}, both{t, {}};
    for (std::size_t k = 0; k < 4; ++k) {
      NodeId c = t;
      c.push_back(k);
      if (rng() % 2) a.excluded.push_back(c), both.excluded.push_back(c);
      else if (rng() % 2) b.excluded.push_back(c), both.excluded.push_back(c);
    }
    NodeId x;
    for (std::size_t d = rng() % 4; d > 0; --d) x.push_back(rng() % 5);
    CHECK((wedge_member(deep, a, x) && wedge_member(deep, b, x)) == wedge_member(deep, both, x));
  }
}

TEST_CASE("isolated points") {
  CHECK(is_isolated(Subspace::whole(TreeExpr::leaf()), {}));
  CHECK_FALSE(is_isolated(Subspace::whole(blossom(1UL)), {}));
  TreeExpr two = TreeExpr::node(ChildGen::of_items({blossom(1UL), blossom(1UL)}));
  CHECK(is_isolated(Subspace::whole(two), {}));
  CHECK(is_isolated(Subspace::of_view(derive(blossom(O("w")), 3UL)), {3}));
  CHECK_FALSE(is_isolated(Subspace::of_view(derive(blossom(O("w")), 3UL)), {}));
  CHECK_THROWS_AS(is_isolated(Subspace::of_view(derive(blossom(O("w")), 3UL)), {2}), std::invalid_argument);
}

TEST_CASE("cb_derive") {
  for (const char* s : {"1", "2", "w"}) {
    TreeExpr t = blossom(O(s));
    Subspace once = cb_derive(Subspace::whole(t)).result;
    Truncation tr = truncate(t, 4, 4);
    for (const auto& p : tr.paths) CHECK(once.contains(p) == derive(t, 1UL).contains(p));
  }
  CbStep chain = cb_derive(Subspace::whole(chain_tree(2)));
  CHECK(chain.result.empty());
  CHECK(chain.downward_closed);
  CHECK(cb_derive(Subspace::empty_of(blossom(2UL))).result.empty());

  // A finite node above an infinitely branching one: the derivative loses
  // downward closure and says so.
  TreeExpr mixed = TreeExpr::node(ChildGen::of_items({blossom(2UL)}));
  CbStep step = cb_derive(Subspace::whole(mixed));
  CHECK_FALSE(step.downward_closed);
  CHECK(step.result.contains({0}));
  CHECK_FALSE(step.result.contains({}));
}

TEST_CASE("cb_rank") {
  CHECK(cb_rank(blossom(O("w"))) == O("w+1"));
  CHECK(cb_rank(TreeExpr::leaf()) == 1UL);
  CHECK(cb_rank(chain_tree(5)) == 1UL);
  CHECK(cb_rank(full_subtree(blossom(O("w^(2)+w")), 1, 2)) == O("w^(2)+w+1"));
}

TEST_CASE("closed sets") {
  FinTree t({FinTree::npos, 0, 0, 1});
  CHECK(check_closed_downward(t, {false, false, false, false}));
  CHECK(check_closed_downward(t, {true, true, true, true}));
  CHECK(check_closed_downward(t, {true, true, false, false}));
  CHECK_FALSE(check_closed_downward(t, {false, true, false, false}));

  // Every downwards closed subset of every random tree up to 10 nodes.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    FinTree f = verify::random_fintree(rng, 1 + trial % 10);
    for (unsigned mask = 0; mask < (1u << f.size()); ++mask) {
      std::vector<bool> s(f.size());
      bool closed = true;
      for (std::size_t i = 0; i < f.size(); ++i) s[i] = (mask >> i) & 1u;
      for (std::size_t i = 0; i < f.size() && closed; ++i)
        if (s[i] && f.parent(i) != FinTree::npos && !s[f.parent(i)]) closed = false;
      if (closed) CHECK(check_closed_downward(f, s));
    }
  }
}

TEST_CASE("embedding continuity") {
  TreeExpr c3 = chain_tree(3);
  Embedding id{{{}, {}}, {{0}, {0}}, {{0, 0}, {0, 0}}};
  CHECK(check_embedding_continuity(id, c3, c3).continuous);
  auto phi = embed(chain_tree(2), 2UL);
  CHECK(check_embedding_continuity(phi, chain_tree(2), blossom(2UL)).continuous);

  TreeExpr cherry = TreeExpr::node(ChildGen::of_items({chain_tree(2), TreeExpr::leaf()}));
  auto good = embed(cherry, 3UL);
  CHECK(check_embedding_continuity(good, cherry, blossom(3UL)).continuous);
  // Swap the images of the root and a child.
  Embedding bad = good;
  bad[NodeId{1}] = good[NodeId{}];
  bad[NodeId{}] = good[NodeId{1}];
  CHECK_FALSE(check_embedding_continuity(bad, cherry, blossom(3UL)).continuous);

  Embedding gap{{{}, {}}, {{0}, {0, 0}}};
  CHECK_THROWS_AS(check_embedding_continuity(gap, chain_tree(2), blossom(2UL)), std::invalid_argument);
}

TEST_CASE("compactness") {
  auto r = compactness_report(blossom(O("w")));
  CHECK(r.chain_complete);
  CHECK(r.min_finite);
  auto f = compactness_report(FinTree({FinTree::npos, 0}));
  CHECK(f.compact);
  auto s = compactness_report(star(blossom(O("w"))));
  CHECK(s.chain_complete);
  CHECK_FALSE(s.min_finite);
  CHECK_FALSE(s.compact);
}
