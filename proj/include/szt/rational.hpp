#pragma once

// Exact integers and rationals (GMP backed) with the `p/q` text form used on
// the command line and in every JSON schema of the toolkit.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace szt {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses `p`, `-p` or `p/q` (q > 0 after normalization). No floats, no spaces.
Rational parse_rational(std::string_view text);

/// Canonical text: `p` for integers, `p/q` otherwise.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& n);

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// 2^n as an exact integer.
BigInt pow2(unsigned long n);

/// Certified double enclosure of the square root of a nonnegative rational.
struct SqrtEnclosure {
  double lo = 0.0;
  double hi = 0.0;
  bool exact = false;   // square is the square of a rational
  Rational root;        // valid when exact
};
SqrtEnclosure sqrt_enclosure(const Rational& square);

}  // namespace szt
