#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// An Ordinal is the finite sum  w^e1*c1 + w^e2*c2 + ... + w^ek*ck  with
// e1 > e2 > ... > ek (themselves Ordinals) and every ci >= 1. The empty sum is
// zero. The representation is canonical, so structural equality is ordinal
// equality. Values are immutable; every operation is a pure function.

#include "szt/rational.hpp"

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace szt {

struct OrdinalTerm;

/// Default cap on exponent nesting (see Ordinal::nesting_depth).
inline constexpr std::size_t kDefaultMaxNesting = 16;

/// Raised when an operation would build an ordinal nested deeper than allowed.
class DepthLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Ordinal {
 public:
  Ordinal() = default;
  Ordinal(unsigned long n);  // NOLINT: naturals convert implicitly
  explicit Ordinal(const BigInt& n);

  static Ordinal omega();

  /// Builds from terms, rejecting non-canonical sequences.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  /// Value of a finite ordinal; throws std::domain_error on infinite ones.
  BigInt finite_value() const;
  /// 0 for zero, otherwise 1 + the largest nesting depth among exponents.
  std::size_t nesting_depth() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<OrdinalTerm> terms_;
};

struct OrdinalTerm {
  Ordinal exponent;
  BigInt coefficient;
};

bool operator==(const OrdinalTerm& a, const OrdinalTerm& b);

enum class Ordering { less, equal, greater };

Ordering cmp(const Ordinal& a, const Ordinal& b);
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
/// a * n for a positive natural n.
Ordinal nat_mul(const Ordinal& a, const BigInt& n);
Ordinal omega_pow(const Ordinal& a, std::size_t max_nesting = kDefaultMaxNesting);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

struct OrdinalClass {
  enum class Kind { zero, successor, limit };
  Kind kind = Kind::zero;
  Ordinal predecessor;  // meaningful for successors only
};

OrdinalClass classify(const Ordinal& a);
inline bool is_successor(const Ordinal& a) { return classify(a).kind == OrdinalClass::Kind::successor; }
inline bool is_limit(const Ordinal& a) { return classify(a).kind == OrdinalClass::Kind::limit; }
Ordinal successor(const Ordinal& a);
/// a - 1 for successor a; throws std::domain_error otherwise.
Ordinal predecessor(const Ordinal& a);

/// n-th element of the canonical non-decreasing sequence cofinal in xi.
///
///   xi = eta + 1             ->  eta (constant)
///   tail w^(b+1)*c, b = 0    ->  head + w*(c-1) + n
///   tail w^(b+1)*c, b > 0    ->  head + w^(b+1)*(c-1) + w^b*(n+1)
///   tail w^l*c, l limit      ->  head + w^l*(c-1) + w^(fund_seq(l, n))
Ordinal fund_seq(const Ordinal& xi, unsigned long n);

/// The exponent alpha with w^alpha <= xi < w^(alpha+1).
Ordinal leading_alpha(const Ordinal& xi);

/// Least N >= 0 with xi <= w^alpha * 2^N + 1. Requires xi < w^(alpha+1).
unsigned long doubling_exponent(const Ordinal& xi, const Ordinal& alpha);

/// The unique d with a + d = b. Requires a <= b.
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);

/// Text form: `0`, `7`, `w`, `w*3`, `w^(2)*3+w*4+7`, `w^(w)`.
std::string to_string(const Ordinal& a);
/// Parses the text form; rejects non-canonical input with a diagnostic.
Ordinal parse_ordinal(std::string_view text, std::size_t max_nesting = kDefaultMaxNesting);

}  // namespace szt

namespace szt {

enum class OracleOp { add, mul };

/// Test oracle: computes a+b or a*b by building the sum/product well-order on
/// lexicographically ordered tuples of naturals and reading off its order
/// type. Inputs must lie below w^3 with coefficients <= 8.
Ordinal order_type_oracle(const Ordinal& a, const Ordinal& b, OracleOp op);

}  // namespace szt
