#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "padicsl2/errors.hpp"

namespace padicsl2 {

// Exact arithmetic is delegated to GMP throughout. Everything the library
// computes with is either an Integer, a Rational, or an approximate p-adic
// built from Integers.
using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(n, d) does NOT reduce the fraction; this wrapper does, and it
// rejects d == 0. Always build rationals from separate numerator/denominator
// through here.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "a" or "a/b" with optional leading '-' on the numerator,
// b > 0 after reduction is not required of the input but holds for the
// result. Throws ParseError on anything else, including b == 0.
Rational parse_rational(const std::string& text);

// Canonical form: "a" for integers, "a/b" with b > 1 otherwise.
std::string to_string(const Rational& x);
std::string to_string(const Integer& n);

// Value in Z ∪ {+inf}; +inf is the valuation of 0. Totally ordered, with
// +inf absorbing under addition.
class Valuation {
public:
  constexpr Valuation(long v) : infinite_(false), v_(v) {}  // NOLINT implicit

  static constexpr Valuation infinity() {
    Valuation r(0);
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }

  // Finite value; must not be called on +inf.
  constexpr long value() const { return v_; }

  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }

  friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.v_ <=> b.v_;
  }

  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.v_ + b.v_);
  }

  std::string str() const { return infinite_ ? "+inf" : std::to_string(v_); }

private:
  bool infinite_;
  long v_;
};

}  // namespace padicsl2
