// Order-type oracle for ordinal sums and products.
//
// An ordinal a = w^2*p + w*q + r < w^3 is realized as the set of triples of
// naturals lexicographically below (p, q, r). The sum a+b is the tagged union
// {(0, x)} u {(1, y)} in N^4 and the product a*b is {(y, x) : y in b, x in a}
// in N^6, both ordered lexicographically. The order type of such a set S is
// read off by splitting on the first coordinate: values 0..m each contribute
// their fiber, and all larger values share one fiber F (membership only
// compares coordinates with constants <= m), contributing w copies of F, i.e.
// w^(lead(F)+1). Concatenated blocks are normalized by deleting every block
// followed by a block of strictly larger exponent.
//
// Nothing here calls add() or mul() on Ordinals.

#include "szt/ordinal.hpp"

#include <array>
#include <functional>
#include <utility>

namespace szt {

namespace {

constexpr unsigned kMaxCoefficient = 8;
constexpr unsigned kMaxArity = 6;

struct Block {
  unsigned exponent;
  BigInt coefficient;
};
using Blocks = std::vector<Block>;

using Tuple = std::array<unsigned, kMaxArity>;
using Membership = std::function<bool(const Tuple&)>;

Blocks normalize(const Blocks& in) {
  Blocks out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = i + 1; j < in.size() && !dominated; ++j) dominated = in[j].exponent > in[i].exponent;
    if (dominated) continue;
    if (!out.empty() && out.back().exponent == in[i].exponent)
      out.back().coefficient += in[i].coefficient;
    else
      out.push_back(in[i]);
  }
  return out;
}

Blocks order_type(const Membership& member, Tuple& prefix, unsigned depth, unsigned arity, unsigned m) {
  if (depth == arity) return member(prefix) ? Blocks{{0, BigInt(1)}} : Blocks{};
  Blocks parts;
  for (unsigned v = 0; v <= m; ++v) {
    prefix[depth] = v;
    Blocks fiber = order_type(member, prefix, depth + 1, arity, m);
    parts.insert(parts.end(), fiber.begin(), fiber.end());
  }
  prefix[depth] = m + 1;
  Blocks tail = order_type(member, prefix, depth + 1, arity, m);
  prefix[depth] = 0;
  if (!tail.empty()) parts.push_back({tail.front().exponent + 1, BigInt(1)});
  return normalize(parts);
}

std::array<unsigned, 3> bound_tuple(const Ordinal& a) {
  std::array<unsigned, 3> out{0, 0, 0};
  for (const auto& t : a.terms()) {
    if (!t.exponent.is_finite() || t.exponent.finite_value() > 2)
      throw std::invalid_argument("oracle input " + to_string(a) + " is not below w^3");
    if (t.coefficient > kMaxCoefficient)
      throw std::invalid_argument("oracle input " + to_string(a) + " has a coefficient above 8");
    unsigned e = static_cast<unsigned>(t.exponent.finite_value().get_ui());
    out[2 - e] = static_cast<unsigned>(t.coefficient.get_ui());
  }
  return out;
}

bool lex_below(const unsigned* t, const std::array<unsigned, 3>& bound) {
  for (unsigned i = 0; i < 3; ++i) {
    if (t[i] != bound[i]) return t[i] < bound[i];
  }
  return false;
}

}  // namespace

Ordinal order_type_oracle(const Ordinal& a, const Ordinal& b, OracleOp op) {
  const auto ta = bound_tuple(a);
  const auto tb = bound_tuple(b);
  unsigned m = 1;
  for (unsigned v : ta) m = std::max(m, v);
  for (unsigned v : tb) m = std::max(m, v);

  Membership member;
  unsigned arity = 0;
  if (op == OracleOp::add) {
    arity = 4;
    member = [&](const Tuple& t) {
      if (t[0] == 0) return lex_below(&t[1], ta);
      if (t[0] == 1) return lex_below(&t[1], tb);
      return false;
    };
  } else {
    arity = 6;
    member = [&](const Tuple& t) { return lex_below(&t[0], tb) && lex_below(&t[3], ta); };
  }

  Tuple prefix{};
  Blocks blocks = order_type(member, prefix, 0, arity, m);
  std::vector<OrdinalTerm> terms;
  for (auto it = blocks.begin(); it != blocks.end(); ++it)
    terms.push_back({Ordinal(static_cast<unsigned long>(it->exponent)), it->coefficient});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace szt
