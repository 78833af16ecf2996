#include "szt/norms.hpp"

#include <algorithm>
#include <stdexcept>

namespace szt {

namespace {

Rational sum_sq(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

}  // namespace

std::string to_string(NormTag n) {
  switch (n) {
    case NormTag::l1:
      return "l1";
    case NormTag::sup:
      return "sup";
    case NormTag::l2:
      return "l2";
  }
  return "?";
}

NormTag parse_norm_tag(const std::string& s) {
  if (s == "l1") return NormTag::l1;
  if (s == "sup" || s == "linf") return NormTag::sup;
  if (s == "l2") return NormTag::l2;
  throw std::invalid_argument("unknown norm '" + s + "'");
}

NormTag dual(NormTag n) {
  switch (n) {
    case NormTag::l1:
      return NormTag::sup;
    case NormTag::sup:
      return NormTag::l1;
    default:
      return NormTag::l2;
  }
}

Rational vec_norm(const std::vector<Rational>& v, NormTag n) {
  Rational r = 0;
  switch (n) {
    case NormTag::l1:
      for (const auto& x : v) r += abs(x);
      return r;
    case NormTag::sup:
      for (const auto& x : v) r = std::max(r, abs(x));
      return r;
    case NormTag::l2: {
      auto e = sqrt_enclosure(sum_sq(v));
      if (!e.exact) throw std::domain_error("l2 norm is irrational");
      return e.root;
    }
  }
  return r;
}

bool norm_at_most(const std::vector<Rational>& v, NormTag n, const Rational& bound) {
  if (bound < 0) return false;
  if (n == NormTag::l2) return sum_sq(v) <= bound * bound;
  return vec_norm(v, n) <= bound;
}

}  // namespace szt
