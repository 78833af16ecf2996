#include "generators.hpp"

#include <algorithm>

namespace szt::verify {

Rational random_small_rational(std::mt19937_64& rng, long span, long max_den) {
  long p = std::uniform_int_distribution<long>(-span, span)(rng);
  long q = std::uniform_int_distribution<long>(1, max_den)(rng);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

RatMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_small_rational(rng, 3, 3);
    if (inverse(m)) return m;
  }
}

Witness random_witness(std::mt19937_64& rng, const FinTree& T, NormTag space) {
  const std::size_t n = T.size();
  RatMatrix M = random_invertible(rng, n);
  RatMatrix Minv = *inverse(M);
  Witness w;
  w.space = space;
  std::vector<Rational> d(n), len(n);
  for (std::size_t s = 0; s < n; ++s) {
    auto c = M.col(s);
    len[s] = vec_norm(c, space == NormTag::l2 ? NormTag::l1 : space);
    for (auto& x : c) x /= len[s];
    w.x.push_back(std::move(c));
    d[s] = Rational(std::uniform_int_distribution<long>(1, 6)(rng), 3);
    d[s].canonicalize();
  }
  // <x_t*, x_s> = sum over ancestors a of t of d_a (M^-1 M e_s)_a / len_s,
  // which is d_s / len_s when s <= t and 0 otherwise.
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Rational> f(n, Rational(0));
    for (std::size_t s = 0; s < n; ++s) {
      if (!T.leq(s, t)) continue;
      for (std::size_t j = 0; j < n; ++j) f[j] += d[s] * Minv(s, j);
    }
    w.xstar.push_back(std::move(f));
  }
  w.delta = 0;
  for (std::size_t s = 0; s < n; ++s) {
    w.diag.push_back(d[s] / len[s]);
    if (s == 0 || w.diag[s] < w.delta) w.delta = w.diag[s];
  }
  return w;
}

FactorableInstance random_factorable(std::mt19937_64& rng, const FinTree& T, NormTag space) {
  FactorableInstance inst;
  inst.witness = random_witness(rng, T, space);
  const std::size_t n = T.size();
  inst.top = {random_invertible(rng, n), space, NormTag::sup};
  RatMatrix inv = *inverse(inst.top.m);
  Rational worst = 0;
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i] += inst.witness.xstar[t][j] * inv(j, i);
    Rational l1 = 0;
    for (const auto& c : v) l1 += abs(c);
    worst = std::max(worst, l1);
    inst.vstar.push_back(std::move(v));
  }
  if (worst > 1) {
    Rational c = 1 / worst;
    for (auto& v : inst.vstar)
      for (auto& x : v) x *= c;
    for (auto& f : inst.witness.xstar)
      for (auto& x : f) x *= c;
    for (auto& x : inst.witness.diag) x *= c;
    inst.witness.delta *= c;
  }
  return inst;
}

RandomEmbedding random_subtree_embedding(std::mt19937_64& rng, const FinTree& T) {
  std::size_t apex = std::uniform_int_distribution<std::size_t>(0, T.size() - 1)(rng);
  std::vector<std::size_t> chosen{apex};
  for (std::size_t u = 0; u < T.size(); ++u)
    if (u != apex && T.leq(apex, u) && rng() % 2) chosen.push_back(u);
  std::sort(chosen.begin(), chosen.end(), [&](std::size_t a, std::size_t b) {
    return T.depth(a) != T.depth(b) ? T.depth(a) < T.depth(b) : a < b;
  });
  // Parent in the induced order: the deepest chosen proper ancestor.
  std::vector<std::size_t> parent(chosen.size(), FinTree::npos);
  for (std::size_t i = 1; i < chosen.size(); ++i) {
    std::size_t best = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (T.leq(chosen[j], chosen[i]) && T.depth(chosen[j]) >= T.depth(chosen[best])) best = j;
    parent[i] = best;
  }
  return {FinTree(std::move(parent)), chosen};
}

std::string witness_pattern_failure(const FinTree& T, const Witness& w) {
  const std::size_t n = T.size();
  if (w.x.size() != n || w.xstar.size() != n) return "size mismatch";
  if (w.delta <= 0) return "delta not positive";
  for (std::size_t s = 0; s < n; ++s) {
    Rational own = 0;
    for (std::size_t i = 0; i < w.x[s].size(); ++i) own += w.xstar[s][i] * w.x[s][i];
    if (own < w.delta) return "diagonal below delta at " + std::to_string(s);
    Rational len = 0;
    for (const auto& c : w.x[s]) len = w.space == NormTag::sup ? std::max(len, abs(c)) : Rational(len + abs(c));
    if (w.space != NormTag::l2 && len > 1) return "x outside the ball at " + std::to_string(s);
    for (std::size_t t = 0; t < n; ++t) {
      Rational p = 0;
      for (std::size_t i = 0; i < w.x[s].size(); ++i) p += w.xstar[t][i] * w.x[s][i];
      bool below = false;
      for (std::size_t a = t; a != FinTree::npos; a = T.parent(a)) below = below || a == s;
      if (p != (below ? own : Rational(0))) return "pairing off pattern at t=" + std::to_string(t) + " s=" + std::to_string(s);
    }
  }
  return {};
}

}  // namespace szt::verify
