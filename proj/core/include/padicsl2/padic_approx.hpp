#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padicsl2/padic.hpp"
#include "padicsl2/rational.hpp"

namespace padicsl2 {

inline constexpr unsigned kDefaultPrecision = 64;
inline constexpr unsigned kMinPrecision = 4;

// Working precision for approximate p-adic arithmetic: the prime together
// with a cap N on the number of significant base-p digits carried.
class PadicCtx {
public:
  explicit PadicCtx(Prime p, unsigned precision = kDefaultPrecision);

  const Prime& prime() const { return prime_; }
  unsigned precision() const { return precision_; }
  // p^k for 0 <= k <= precision (cached).
  const Integer& power(unsigned k) const;
  // p^precision.
  const Integer& modulus() const { return power(precision_); }

  friend bool operator==(const PadicCtx& a, const PadicCtx& b) {
    return a.prime_ == b.prime_ && a.precision_ == b.precision_;
  }

private:
  Prime prime_;
  unsigned precision_;
  // Shared so that copies of a context (sprinkled through every scalar) stay
  // cheap.
  std::shared_ptr<const std::vector<Integer>> powers_;
};

// A p-adic number known to finite precision, in the capped-relative model:
// either
//   unit * p^valuation + O(p^(valuation + digits))
// with 1 <= digits <= N, unit in [1, p^digits) prime to p, and the valuation
// exact; or a "zeroish" value O(p^bound) carrying no certified digit at all
// (digits() == 0). Exact zero is the zeroish value with infinite bound.
//
// Arithmetic tracks precision the way interval arithmetic tracks width:
// multiplication keeps min(digits), addition aligns windows and may cancel
// into a zeroish result, inversion preserves digits.
class PadicApprox {
public:
  static PadicApprox zero(const PadicCtx& ctx);                   // exact 0
  static PadicApprox big_oh(const PadicCtx& ctx, Valuation bound);  // O(p^bound)
  static PadicApprox from_parts(const PadicCtx& ctx, long valuation, Integer unit,
                                unsigned digits);

  const PadicCtx& ctx() const { return ctx_; }

  // True when at least one digit is certified, i.e. the value is provably
  // nonzero and its valuation is exact.
  bool known_nonzero() const { return digits_ > 0; }
  bool is_exact_zero() const { return digits_ == 0 && bound_.is_infinite(); }
  // Certified significant digits (0 for zeroish values).
  unsigned digits() const { return digits_; }

  // Exact valuation; requires known_nonzero().
  long valuation() const;
  // For zeroish values: the value is O(p^bound). For unit values this is
  // the exact valuation.
  Valuation valuation_lower_bound() const;
  // Unit part in [1, p^digits); requires known_nonzero().
  const Integer& unit() const;
  // Valuation of the first uncertified digit: valuation + digits for unit
  // values, the O-bound for zeroish ones.
  Valuation window_end() const;

  PadicApprox operator-() const;
  PadicApprox inv() const;  // NotInvertible when no digit is certified

  friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);

  // Display form, e.g. "3*5^-1 + O(5^63)" or "O(5^12)" or "0".
  std::string str() const;

private:
  PadicApprox(const PadicCtx& ctx, long valuation, Integer unit, unsigned digits,
              Valuation bound)
      : ctx_(ctx), valuation_(valuation), unit_(std::move(unit)), digits_(digits),
        bound_(bound) {}

  PadicCtx ctx_;
  long valuation_ = 0;  // meaningful iff digits_ > 0
  Integer unit_;        // meaningful iff digits_ > 0
  unsigned digits_ = 0;
  Valuation bound_ = Valuation::infinity();  // meaningful iff digits_ == 0
};

// Embedding of an exact rational: full N certified digits (or exact zero).
PadicApprox to_padic(const Rational& x, const PadicCtx& ctx);

// a and b agree through the intersection of their certified windows, i.e.
// a - b has no certified nonzero digit.
bool agree(const PadicApprox& a, const PadicApprox& b);
bool agree(const PadicApprox& a, const Rational& b);

// Squareness of an approximate value. Needs 1 certified digit for odd p and
// 3 for p = 2 (PrecisionExhausted below that); ZeroInput for zeroish input.
bool is_square(const PadicApprox& x);

// Square class of an approximate value; same precision demands as is_square.
SquareClass square_class(const PadicApprox& x);

// Canonical square root of an approximate square. The two roots differ by a
// sign; the one whose base-p digit string (least significant first) is
// lexicographically smaller is returned, which pins the choice down
// deterministically. For p = 2 one digit of determination is lost:
// digits(result) = digits(x) - 1.
PadicApprox sqrt(const PadicApprox& x);

// Exact square root when x is the square of a rational, with the canonical
// sign for p (the same digit convention sqrt() uses); nullopt when x is not
// a rational square. Note a p-adic square need not be a rational one.
std::optional<Rational> rational_sqrt_canonical(const Rational& x, const Prime& p);

// Square root of an exact rational x at working precision, via Hensel
// lifting from the residue solution. The returned root y satisfies
// y^2 ≡ x mod p^(v_p(x) + N) as an exact congruence of the stored unit.
// Rational squares short-circuit to the exact embedded root. Canonical sign
// as for sqrt(). ZeroInput on 0, NotASquare on nonsquares.
PadicApprox hensel_sqrt(const Rational& x, const PadicCtx& ctx);

// Whether x is a 2^k-th power in Q_p^x. Decided by k rounds of square
// testing with branching over both root signs. Raises PrecisionExhausted
// when the working precision cannot support k rounds (remedy: raise it).
bool is_pow2k_power(const Rational& x, const Prime& p, unsigned k,
                    unsigned precision = kDefaultPrecision);

}  // namespace padicsl2
