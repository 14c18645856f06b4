#pragma once

#include <string>
#include <vector>

#include "padicsl2/rational.hpp"

namespace padicsl2 {

// A checked prime. Primality is certified deterministically (trial division
// plus fixed-base strong pseudoprime tests), which is conclusive for all
// p < 3.3e24; larger inputs are rejected rather than probabilistically
// accepted.
class Prime {
public:
  explicit Prime(Integer p);
  explicit Prime(long p) : Prime(Integer(p)) {}

  const Integer& value() const { return p_; }
  bool is_two() const { return p_ == 2; }

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }

private:
  Integer p_;
};

// Residue field element, value in [0, p).
struct FpElem {
  Integer value;

  friend bool operator==(const FpElem& a, const FpElem& b) {
    return a.value == b.value;
  }
};

// v_p on Q, with v_p(0) = +inf.
Valuation vp(const Integer& n, const Prime& p);
Valuation vp(const Rational& x, const Prime& p);

// Reduction of x mod p. Defined only for v_p(x) >= 0 (NegativeValuation
// otherwise); denominators prime to p are inverted mod p.
FpElem residue(const Rational& x, const Prime& p);

// ac(x) = residue of p^(-v_p(x)) * x, the leading digit of x. ZeroInput on 0.
FpElem angular_component(const Rational& x, const Prime& p);

// Squareness in the residue field F_p. Zero is rejected (ZeroInput); for
// p = 2 every nonzero element is a square; for odd p this is the Euler
// criterion c^((p-1)/2) == 1.
bool is_fp_square(const FpElem& c, const Prime& p);

// Squareness in Q_p. For odd p: v_p(x) even and ac(x) a residue-field
// square. For p = 2: v_2(x) even and the odd part congruent to 1 mod 8.
bool is_square(const Rational& x, const Prime& p);

// Smallest positive integer that is a quadratic nonresidue mod p. Only
// meaningful for odd p; p = 2 raises UnsupportedPrime.
Rational find_nonresidue(const Prime& p);

// The square class group Q_p^x / (Q_p^x)^2. Four classes for odd p with
// representatives {1, u, p, u*p} (u the smallest positive nonresidue),
// eight for p = 2 with representatives {+-1, +-2, +-5, +-10}.
enum class SquareClassTag {
  One,
  U,
  P,
  UP,
  Plus1,
  Minus1,
  Plus2,
  Minus2,
  Plus5,
  Minus5,
  Plus10,
  Minus10,
};

class SquareClass {
public:
  SquareClassTag tag() const { return tag_; }
  const Rational& rep() const { return rep_; }
  bool is_identity() const {
    return tag_ == SquareClassTag::One || tag_ == SquareClassTag::Plus1;
  }
  // Short display name: "1", "u", "p", "up" resp. "+1", "-1", ..., "-10".
  std::string label() const;

  static SquareClass from_tag(SquareClassTag tag, const Prime& p);
  static SquareClass from_label(const std::string& label, const Prime& p);
  // The trivial class ("1" resp. "+1").
  static SquareClass identity(const Prime& p);
  // All classes for p, identity first, in a fixed order.
  static std::vector<SquareClass> all(const Prime& p);
  static std::vector<SquareClass> nonidentity(const Prime& p);

  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.tag_ == b.tag_;
  }
  friend bool operator<(const SquareClass& a, const SquareClass& b) {
    return static_cast<int>(a.tag_) < static_cast<int>(b.tag_);
  }

private:
  SquareClass(SquareClassTag tag, Rational rep) : tag_(tag), rep_(std::move(rep)) {}

  SquareClassTag tag_;
  Rational rep_;
};

// Class of x in Q_p^x / (Q_p^x)^2. ZeroInput on 0.
SquareClass square_class(const Rational& x, const Prime& p);

// Class-group multiplication: class of (rep(a) * rep(b)).
SquareClass square_class_mul(const SquareClass& a, const SquareClass& b, const Prime& p);

// Odd part of x reduced mod 2^k, as a value in [0, 2^k). Only for p = 2
// style computations; x must be nonzero.
Integer odd_part_mod(const Rational& x, unsigned k);

}  // namespace padicsl2
