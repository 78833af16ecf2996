#include "szt/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace szt {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "' (expected p or p/q)");
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& n) { return n.get_str(); }

BigInt pow2(unsigned long n) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

SqrtEnclosure sqrt_enclosure(const Rational& square) {
  if (square < 0) throw std::domain_error("square root of a negative rational");
  SqrtEnclosure out;
  const BigInt& n = square.get_num();
  const BigInt& d = square.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out.exact = true;
    out.root = Rational(rn, rd);
    out.root.canonicalize();
  }
  double approx = std::sqrt(square.get_d());
  out.lo = std::nextafter(std::nextafter(approx, 0.0), 0.0);
  out.hi = std::nextafter(std::nextafter(approx, HUGE_VAL), HUGE_VAL);
  if (out.lo < 0) out.lo = 0;
  // Certify the enclosure exactly; widen on the rare double-rounding miss.
  while (Rational(out.lo) * Rational(out.lo) > square) out.lo = std::nextafter(out.lo, 0.0);
  while (Rational(out.hi) * Rational(out.hi) < square) out.hi = std::nextafter(out.hi, HUGE_VAL);
  return out;
}

}  // namespace szt
