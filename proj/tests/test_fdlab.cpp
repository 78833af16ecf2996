#include "doctest.h"

#include "szt/fdlab.hpp"

#include <cmath>
#include <random>

using namespace szt;

namespace {

RVec R(std::initializer_list<long> xs) {
  RVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

EuclidModel model(std::size_t d, NormTag n) {
  EuclidModel m;
  m.dim = d;
  m.norm = n;
  return m;
}

// Dual distance by brute force over a coefficient grid; an upper bound that
// tightens as the grid refines.
double grid_distance(const EuclidModel& m, const DVec& x, const std::vector<DVec>& B, double step, double range) {
  double best = norm_of(x, m.dual_norm());
  std::size_t k = B.size();
  std::size_t n = static_cast<std::size_t>(2 * range / step) + 1;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    DVec r = x;
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < x.size(); ++i) r[i] -= (-range + step * static_cast<double>(idx[j])) * B[j][i];
    best = std::min(best, norm_of(r, m.dual_norm()));
    std::size_t t = 0;
    while (t < k && ++idx[t] == n) idx[t++] = 0;
    if (t == k) break;
  }
  return best;
}

}  // namespace

TEST_CASE("validate and norms") {
  CHECK_THROWS_AS(validate(model(0, NormTag::l1)), std::invalid_argument);
  CHECK_THROWS_AS(validate(model(9, NormTag::l1)), std::invalid_argument);
  validate(model(8, NormTag::l2));
  CHECK(norm_of({3, -4}, NormTag::l2) == doctest::Approx(5));
  CHECK(norm_of({3, -4}, NormTag::l1) == 7);
  CHECK(norm_of({3, -4}, NormTag::sup) == 4);
  CHECK(model(3, NormTag::l1).dual_norm() == NormTag::sup);
  CHECK_FALSE(model(3, NormTag::l2).exact());
}

TEST_CASE("annihilator") {
  auto a = annihilator({R({1, 1, 0}), R({2, 2, 0})}, 3);
  CHECK(a.size() == 2);
  for (const auto& v : a) CHECK(v[0] + v[1] == 0);
  CHECK(annihilator(std::vector<RVec>{}, 4).size() == 4);
  CHECK(annihilator({R({1, 0}), R({0, 1})}, 2).empty());
  auto d = annihilator(std::vector<DVec>{{1, 2, 3}}, 3);
  REQUIRE(d.size() == 2);
  for (const auto& v : d) CHECK(std::abs(v[0] + 2 * v[1] + 3 * v[2]) < 1e-12);
  CHECK_THROWS_AS(annihilator({R({1, 0})}, 3), std::invalid_argument);
}

TEST_CASE("dual_distance") {
  // X = l1, dual sup: distance from (1,0) to span(1,1) is 1/2.
  CHECK(dual_distance(model(2, NormTag::l1), R({1, 0}), {R({1, 1})}) == Rational(1, 2));
  // X = sup, dual l1: distance from (1,0) to span(1,1) is 1.
  CHECK(dual_distance(model(2, NormTag::sup), R({1, 0}), {R({1, 1})}) == 1);
  CHECK(dual_distance(model(2, NormTag::l2), DVec{1, 0}, {DVec{1, 1}}) == doctest::Approx(std::sqrt(0.5)));
  CHECK(dual_distance(model(3, NormTag::l1), R({1, 2, 3}), {}) == 3);
  CHECK(dual_distance(model(2, NormTag::l1), R({1, 2}), {R({1, 0}), R({0, 1})}) == 0);
  CHECK_THROWS_AS(dual_distance(model(2, NormTag::l2), R({1, 0}), {}), std::domain_error);

  // Against a coefficient grid: the exact value is below every grid value and
  // close to the best one.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    NormTag tag = trial % 2 ? NormTag::l1 : NormTag::sup;
    EuclidModel m = model(3 + trial % 2, tag);
    std::vector<RVec> B;
    std::size_t k = 1 + trial % 2;
    for (std::size_t j = 0; j < k; ++j) {
      RVec b(m.dim);
      for (auto& x : b) x = static_cast<long>(rng() % 5) - 2;
      B.push_back(b);
    }
    RVec x(m.dim);
    for (auto& v : x) v = static_cast<long>(rng() % 7) - 3;
    double exact = dual_distance(m, x, B).get_d();
    std::vector<DVec> Bd;
    for (const auto& b : B) Bd.push_back(to_double(b));
    double grid = grid_distance(m, to_double(x), Bd, 1.0 / 16, 4);
    CHECK(exact <= grid + 1e-12);
    CHECK(dual_distance(m, to_double(x), Bd) == doctest::Approx(exact));
  }
}

TEST_CASE("restricted_sup matches the dual distance") {
  // sup over the unit ball of F_perp of |x*| equals dist(x*, span F) by duality.
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    NormTag tag = trial % 3 == 0 ? NormTag::l1 : trial % 3 == 1 ? NormTag::sup : NormTag::l2;
    EuclidModel m = model(2 + trial % 4, tag);
    std::size_t k = 1 + rng() % (m.dim - 1);
    std::vector<RVec> F;
    for (std::size_t j = 0; j < k; ++j) {
      RVec f(m.dim);
      for (auto& x : f) x = static_cast<long>(rng() % 5) - 2;
      F.push_back(f);
    }
    RVec x(m.dim);
    for (auto& v : x) v = static_cast<long>(rng() % 9) - 4;
    if (m.exact()) {
      CHECK(restricted_sup(m, x, F) == dual_distance(m, x, F));
    } else {
      std::vector<DVec> Fd;
      for (const auto& f : F) Fd.push_back(to_double(f));
      CHECK(restricted_sup(m, to_double(x), Fd) == doctest::Approx(dual_distance(m, to_double(x), Fd)));
    }
  }
  // Worked case: X = sup on R^2, F = {e1}, F_perp = span(e2).
  CHECK(restricted_sup(model(2, NormTag::sup), R({5, -3}), {R({1, 0})}) == 3);
  CHECK(restricted_sup(model(2, NormTag::l1), R({5, -3}), {R({1, 0}), R({0, 1})}) == 0);
}

TEST_CASE("sphere_net") {
  EuclidModel l1 = model(3, NormTag::l1);
  auto pair = sphere_net(l1, {R({0, 2, 0})}, Rational(1, 10));
  CHECK(pair.mesh == "pair");
  REQUIRE(pair.exact_points.size() == 2);
  CHECK(pair.exact_points[0] == R({0, 1, 0}));

  CHECK(sphere_net(l1, {R({1, 0, 0}), R({0, 1, 0})}, 2).points.size() == 1);

  auto cube = sphere_net(l1, {R({1, 0, 0}), R({0, 1, 0})}, Rational(1, 4));
  CHECK(cube.mesh == "cube-face");
  for (const auto& p : cube.exact_points) CHECK(vec_norm(p, NormTag::sup) == 1);
  CHECK(net_sampling_gap(l1, {R({1, 0, 0}), R({0, 1, 0})}, cube, 500, 3) <= 0.25);

  EuclidModel l2 = model(3, NormTag::l2);
  auto ang = sphere_net(l2, {R({1, 0, 0}), R({1, 1, 0})}, Rational(1, 5));
  CHECK(ang.mesh == "angular");
  CHECK(ang.exact_points.empty());
  for (const auto& p : ang.points) CHECK(norm_of(p, NormTag::l2) == doctest::Approx(1));
  CHECK(net_sampling_gap(l2, {R({1, 0, 0}), R({1, 1, 0})}, ang, 500, 4) <= 0.2);

  EuclidModel sup4 = model(4, NormTag::sup);
  std::vector<RVec> F3{R({1, 1, 0, 0}), R({0, 1, -1, 0}), R({0, 0, 1, 2})};
  auto net3 = sphere_net(sup4, F3, Rational(1, 3));
  for (const auto& p : net3.exact_points) CHECK(vec_norm(p, NormTag::l1) == 1);
  CHECK(net_sampling_gap(sup4, F3, net3, 300, 5) <= 1.0 / 3);

  CHECK_THROWS_AS(sphere_net(sup4, F3, Rational(1, 1000), 1000), std::runtime_error);
  CHECK_THROWS_AS(sphere_net(sup4, {R({0, 0, 0, 0})}, Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(sphere_net(sup4, F3, 0), std::invalid_argument);
}

TEST_CASE("lowerlemma_check on random instances") {
  int exact_runs = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    FdInstance inst = random_fd_instance(seed);
    LowerLemmaReport rep = run_lower_instance(inst, 100);
    INFO("seed " << seed);
    CHECK(rep.preconditions_ok);
    for (const auto& f : rep.failures) MESSAGE(f);
    if (rep.exact) {
      ++exact_runs;
      CHECK(rep.margin_exact >= 0);
    } else {
      CHECK(rep.margin >= -kFdTolerance);
    }
  }
  CHECK(exact_runs > 10);
}

TEST_CASE("lowerlemma_check reports broken hypotheses") {
  FdInstance inst;
  inst.model = model(3, NormTag::sup);
  inst.nu = 1;
  inst.F = {R({1, 0, 0})};
  inst.seed = 9;
  LowerLemmaInput in = materialize(inst);
  CHECK(lowerlemma_check(in).preconditions_ok);

  LowerLemmaInput bad = in;
  bad.xstar_exact = R({0, 1, 0});
  bad.xstar = to_double(bad.xstar_exact);
  auto rep = lowerlemma_check(bad);
  CHECK_FALSE(rep.preconditions_ok);

  LowerLemmaInput coarse = in;
  coarse.net = sphere_net(inst.model, inst.F, 2);
  coarse.y.resize(coarse.net.points.size());
  coarse.y_exact.resize(coarse.net.exact_points.size());
  CHECK_FALSE(lowerlemma_check(coarse).preconditions_ok);

  // x* = 0 always has margin 0.
  LowerLemmaInput zero = in;
  zero.xstar_exact = R({0, 0, 0});
  zero.xstar = {0, 0, 0};
  auto z = lowerlemma_check(zero);
  CHECK(z.preconditions_ok);
  CHECK(z.margin_exact == 0);
}

TEST_CASE("kk_norm") {
  EuclidModel m = model(3, NormTag::l1);
  RVec x = R({2, -1, 0});
  Rational c(3, 2);
  // B_1 = whole space: every distance vanishes.
  std::vector<std::vector<RVec>> full{{R({1, 0, 0}), R({0, 1, 0}), R({0, 0, 1})}};
  CHECK(kk_norm(m, x, full, c) == 2);
  // B_1 = {0}: dist = |x*|, weight 1/2.
  std::vector<std::vector<RVec>> zero{{}};
  CHECK(kk_norm(m, x, zero, c) == 2 * (1 + Rational(1, 4)));
  CHECK(kk_norm(m, to_double(x), zero, 1.5) == doctest::Approx(2.5));

  std::vector<std::vector<RVec>> broken{{R({1, 0, 0})}, {R({0, 1, 0})}};
  CHECK_THROWS_AS(check_chain_increasing(broken, 3), std::invalid_argument);
  CHECK_THROWS_AS(kk_norm(m, x, broken, c), std::invalid_argument);
  CHECK_THROWS_AS(kk_norm(m, x, zero, 1), std::invalid_argument);
  CHECK_THROWS_AS(kk_norm(model(3, NormTag::l2), x, zero, c), std::domain_error);

  // Norm axioms and the two-sided bound on random chains.
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    KkInstance inst = random_kk_instance(seed);
    DVec xs = to_double(inst.xstar);
    double base = norm_of(xs, inst.model.dual_norm());
    double v = kk_norm(inst.model, xs, inst.chain, std::sqrt(2.0));
    CHECK(v >= base - 1e-12);
    CHECK(v <= std::sqrt(2.0) * base + 1e-12);
    DVec scaled = xs;
    for (auto& t : scaled) t *= -3;
    CHECK(kk_norm(inst.model, scaled, inst.chain, std::sqrt(2.0)) == doctest::Approx(3 * v));
    if (inst.model.exact()) {
      Rational e = kk_norm(inst.model, inst.xstar, inst.chain, c);
      CHECK(e.get_d() == doctest::Approx(kk_norm(inst.model, xs, inst.chain, 1.5)));
      RVec y(inst.model.dim, Rational(1));
      RVec sum = inst.xstar;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y[i];
      CHECK(kk_norm(inst.model, sum, inst.chain, c) <= e + kk_norm(inst.model, y, inst.chain, c));
    }
  }
}
