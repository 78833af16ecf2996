#include "szt/ordinal.hpp"

#include <algorithm>
#include <utility>

namespace szt {

Ordinal::Ordinal(unsigned long n) {
  if (n != 0) terms_.push_back({Ordinal{}, BigInt(n)});
}

Ordinal::Ordinal(const BigInt& n) {
  if (n < 0) throw std::domain_error("negative natural");
  if (n != 0) terms_.push_back({Ordinal{}, n});
}

Ordinal Ordinal::omega() {
  Ordinal w;
  w.terms_.push_back({Ordinal(1UL), BigInt(1)});
  return w;
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw std::invalid_argument("ordinal coefficient must be >= 1");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw std::invalid_argument("ordinal exponents must be strictly decreasing");
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

bool Ordinal::is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

BigInt Ordinal::finite_value() const {
  if (!is_finite()) throw std::domain_error("ordinal " + to_string(*this) + " is not finite");
  return terms_.empty() ? BigInt(0) : terms_[0].coefficient;
}

std::size_t Ordinal::nesting_depth() const {
  std::size_t inner = 0;
  for (const auto& t : terms_) inner = std::max(inner, t.exponent.nesting_depth());
  return terms_.empty() ? 0 : inner + 1;
}

bool operator==(const OrdinalTerm& a, const OrdinalTerm& b) {
  return a.coefficient == b.coefficient && a.exponent == b.exponent;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0) return c;
    if (x.coefficient != y.coefficient)
      return x.coefficient < y.coefficient ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Ordering cmp(const Ordinal& a, const Ordinal& b) {
  auto c = a <=> b;
  if (c < 0) return Ordering::less;
  if (c > 0) return Ordering::greater;
  return Ordering::equal;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& lead = b.terms().front();
  std::vector<OrdinalTerm> out;
  for (const auto& t : a.terms()) {
    if (t.exponent > lead.exponent) {
      out.push_back(t);
    } else {
      if (t.exponent == lead.exponent) out.push_back({t.exponent, t.coefficient});
      break;
    }
  }
  auto bt = b.terms().begin();
  if (!out.empty() && out.back().exponent == lead.exponent) {
    out.back().coefficient += lead.coefficient;
    ++bt;
  }
  out.insert(out.end(), bt, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  const auto& head = a.terms().front();
  Ordinal result;
  for (const auto& t : b.terms()) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      // a * c: only the leading coefficient scales.
      auto terms = a.terms();
      terms.front().coefficient *= t.coefficient;
      piece = Ordinal::from_terms(std::move(terms));
    } else {
      piece = Ordinal::from_terms({{add(head.exponent, t.exponent), t.coefficient}});
    }
    result = add(result, piece);
  }
  return result;
}

Ordinal nat_mul(const Ordinal& a, const BigInt& n) {
  if (n < 1) throw std::invalid_argument("nat_mul requires n >= 1");
  if (a.is_zero()) return a;
  auto terms = a.terms();
  terms.front().coefficient *= n;
  return Ordinal::from_terms(std::move(terms));
}

Ordinal omega_pow(const Ordinal& a, std::size_t max_nesting) {
  if (a.nesting_depth() + 1 > max_nesting)
    throw DepthLimitError("w^(" + to_string(a) + ") exceeds nesting depth " + std::to_string(max_nesting));
  return Ordinal::from_terms({{a, BigInt(1)}});
}

OrdinalClass classify(const Ordinal& a) {
  if (a.is_zero()) return {OrdinalClass::Kind::zero, {}};
  const auto& last = a.terms().back();
  if (!last.exponent.is_zero()) return {OrdinalClass::Kind::limit, {}};
  auto terms = a.terms();
  if (terms.back().coefficient == 1)
    terms.pop_back();
  else
    terms.back().coefficient -= 1;
  return {OrdinalClass::Kind::successor, Ordinal::from_terms(std::move(terms))};
}

Ordinal successor(const Ordinal& a) { return add(a, Ordinal(1UL)); }

Ordinal predecessor(const Ordinal& a) {
  auto c = classify(a);
  if (c.kind != OrdinalClass::Kind::successor)
    throw std::domain_error(to_string(a) + " is not a successor ordinal");
  return c.predecessor;
}

Ordinal fund_seq(const Ordinal& xi, unsigned long n) {
  auto c = classify(xi);
  if (c.kind == OrdinalClass::Kind::zero) throw std::domain_error("fund_seq is undefined at 0");
  if (c.kind == OrdinalClass::Kind::successor) return c.predecessor;

  std::vector<OrdinalTerm> head(xi.terms().begin(), xi.terms().end() - 1);
  const OrdinalTerm& tail = xi.terms().back();
  if (tail.coefficient > 1) head.push_back({tail.exponent, tail.coefficient - 1});
  Ordinal base = Ordinal::from_terms(std::move(head));

  auto ec = classify(tail.exponent);
  if (ec.kind == OrdinalClass::Kind::successor) {
    const Ordinal& beta = ec.predecessor;
    if (beta.is_zero()) return add(base, Ordinal(n));
    return add(base, Ordinal::from_terms({{beta, BigInt(n + 1)}}));
  }
  return add(base, Ordinal::from_terms({{fund_seq(tail.exponent, n), BigInt(1)}}));
}

Ordinal leading_alpha(const Ordinal& xi) {
  if (xi.is_zero()) throw std::domain_error("leading_alpha is undefined at 0");
  return xi.terms().front().exponent;
}

unsigned long doubling_exponent(const Ordinal& xi, const Ordinal& alpha) {
  const Ordinal bound = Ordinal::from_terms({{successor(alpha), BigInt(1)}});
  if (!(xi < bound))
    throw std::domain_error(to_string(xi) + " is not below w^(" + to_string(successor(alpha)) + ")");
  for (unsigned long n = 0;; ++n) {
    Ordinal cap = successor(Ordinal::from_terms({{alpha, pow2(n)}}));
    if (xi <= cap) return n;
  }
}

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  if (a > b) throw std::domain_error("left_subtract requires a <= b");
  const auto& at = a.terms();
  const auto& bt = b.terms();
  std::size_t i = 0;
  while (i < at.size() && at[i] == bt[i]) ++i;
  if (i == at.size()) return Ordinal::from_terms({bt.begin() + static_cast<std::ptrdiff_t>(i), bt.end()});
  // First difference: either b has a larger exponent, or the same exponent
  // with a larger coefficient.
  std::vector<OrdinalTerm> out;
  if (at[i].exponent == bt[i].exponent) {
    out.push_back({bt[i].exponent, bt[i].coefficient - at[i].coefficient});
    out.insert(out.end(), bt.begin() + static_cast<std::ptrdiff_t>(i) + 1, bt.end());
  } else {
    out.assign(bt.begin() + static_cast<std::ptrdiff_t>(i), bt.end());
  }
  return Ordinal::from_terms(std::move(out));
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += t.coefficient.get_str();
      continue;
    }
    if (t.exponent == Ordinal(1UL))
      out += "w";
    else
      out += "w^(" + to_string(t.exponent) + ")";
    if (t.coefficient != 1) out += "*" + t.coefficient.get_str();
  }
  return out;
}

namespace {

class OrdinalParser {
 public:
  OrdinalParser(std::string_view text, std::size_t max_nesting) : text_(text), max_nesting_(max_nesting) {}

  Ordinal parse_all() {
    Ordinal out = parse_sum(0);
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("ordinal '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BigInt parse_nat() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (start == pos_) fail("expected a natural number");
    if (pos_ - start > 1 && text_[start] == '0') fail("leading zero");
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Ordinal parse_sum(std::size_t depth) {
    if (depth + 1 > max_nesting_) fail("nesting deeper than " + std::to_string(max_nesting_));
    if (pos_ < text_.size() && text_[pos_] == '0' &&
        (pos_ + 1 == text_.size() || text_[pos_ + 1] == ')')) {
      ++pos_;
      return Ordinal{};
    }
    std::vector<OrdinalTerm> terms;
    do {
      OrdinalTerm t = parse_term(depth);
      if (!terms.empty() && !(t.exponent < terms.back().exponent))
        fail("non-canonical: exponents must strictly decrease (got " + to_string(t.exponent) + " after " +
             to_string(terms.back().exponent) + ")");
      terms.push_back(std::move(t));
    } while (eat('+'));
    return Ordinal::from_terms(std::move(terms));
  }

  OrdinalTerm parse_term(std::size_t depth) {
    if (eat('w')) {
      Ordinal exponent(1UL);
      if (eat('^')) {
        if (!eat('(')) fail("expected '(' after '^'");
        exponent = parse_sum(depth + 1);
        if (!eat(')')) fail("expected ')'");
        if (exponent.is_zero()) fail("non-canonical: write w^(0) as 1");
      }
      BigInt coeff(1);
      if (eat('*')) coeff = parse_nat();
      if (coeff < 1) fail("coefficient must be >= 1");
      return {std::move(exponent), coeff};
    }
    BigInt n = parse_nat();
    if (n < 1) fail("zero term inside a sum");
    return {Ordinal{}, n};
  }

  std::string_view text_;
  std::size_t max_nesting_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(std::string_view text, std::size_t max_nesting) {
  return OrdinalParser(text, max_nesting).parse_all();
}

}  // namespace szt
