#include "padicsl2/padic_approx.hpp"

#include <algorithm>

#include "detail/modular.hpp"

namespace padicsl2 {

namespace {

void require_same_ctx(const PadicApprox& a, const PadicApprox& b) {
  if (!(a.ctx() == b.ctx())) {
    throw ContextMismatch("operands built over different p-adic contexts");
  }
}

// Square root mod an odd prime (Tonelli-Shanks; the p % 4 == 3 shortcut
// avoids the loop). a must be a nonzero quadratic residue.
Integer sqrt_mod_p(const Integer& a, const Integer& p) {
  if (p % 4 == 3) {
    return detail::pow_mod(a, (p + 1) / 4, p);
  }
  Integer q = p - 1;
  unsigned long s = detail::remove_factor(q, Integer(2));
  // Any nonresidue serves as the generator of the 2-Sylow part.
  Integer z = 2;
  while (detail::pow_mod(z, (p - 1) / 2, p) == 1) ++z;

  long m = static_cast<long>(s);
  Integer c = detail::pow_mod(z, q, p);
  Integer t = detail::pow_mod(a, q, p);
  Integer r = detail::pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    Integer t2 = t;
    long i = 0;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    Integer b = c;
    for (long j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

}  // namespace

PadicCtx::PadicCtx(Prime p, unsigned precision) : prime_(std::move(p)), precision_(precision) {
  if (precision_ < kMinPrecision) {
    throw PrecisionExhausted("precision " + std::to_string(precision_) + " below the minimum " +
                             std::to_string(kMinPrecision));
  }
  auto powers = std::make_shared<std::vector<Integer>>();
  powers->reserve(precision_ + 1);
  Integer pw(1);
  for (unsigned k = 0; k <= precision_; ++k) {
    powers->push_back(pw);
    pw *= prime_.value();
  }
  powers_ = std::move(powers);
}

const Integer& PadicCtx::power(unsigned k) const {
  if (k > precision_) throw Error("power beyond context cap");
  return (*powers_)[k];
}

PadicApprox PadicApprox::zero(const PadicCtx& ctx) {
  return PadicApprox(ctx, 0, Integer(0), 0, Valuation::infinity());
}

PadicApprox PadicApprox::big_oh(const PadicCtx& ctx, Valuation bound) {
  return PadicApprox(ctx, 0, Integer(0), 0, bound);
}

PadicApprox PadicApprox::from_parts(const PadicCtx& ctx, long valuation, Integer unit,
                                    unsigned digits) {
  digits = std::min(digits, ctx.precision());
  if (digits == 0) return big_oh(ctx, Valuation(valuation));
  unit = detail::mod_nonneg(unit, ctx.power(digits));
  if (unit == 0) return big_oh(ctx, Valuation(valuation + static_cast<long>(digits)));
  const auto shift = detail::remove_factor(unit, ctx.prime().value());
  valuation += static_cast<long>(shift);
  digits -= static_cast<unsigned>(shift);
  return PadicApprox(ctx, valuation, std::move(unit), digits, Valuation::infinity());
}

long PadicApprox::valuation() const {
  if (digits_ == 0) {
    throw PrecisionExhausted("valuation requested of a value with no certified digit");
  }
  return valuation_;
}

Valuation PadicApprox::valuation_lower_bound() const {
  return digits_ > 0 ? Valuation(valuation_) : bound_;
}

const Integer& PadicApprox::unit() const {
  if (digits_ == 0) {
    throw PrecisionExhausted("unit requested of a value with no certified digit");
  }
  return unit_;
}

Valuation PadicApprox::window_end() const {
  return digits_ > 0 ? Valuation(valuation_ + static_cast<long>(digits_)) : bound_;
}

PadicApprox PadicApprox::operator-() const {
  if (digits_ == 0) return *this;
  return PadicApprox(ctx_, valuation_, ctx_.power(digits_) - unit_, digits_, bound_);
}

PadicApprox PadicApprox::inv() const {
  if (digits_ == 0) {
    throw NotInvertible("inverse of a value with no certified digit");
  }
  return PadicApprox(ctx_, -valuation_, detail::invert_mod(unit_, ctx_.power(digits_)), digits_,
                     Valuation::infinity());
}

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
  require_same_ctx(a, b);
  const PadicCtx& ctx = a.ctx();
  if (!a.known_nonzero() && !b.known_nonzero()) {
    return PadicApprox::big_oh(ctx, std::min(a.window_end(), b.window_end()));
  }
  if (!a.known_nonzero() || !b.known_nonzero()) {
    const PadicApprox& z = a.known_nonzero() ? b : a;
    const PadicApprox& u = a.known_nonzero() ? a : b;
    const Valuation end = std::min(z.window_end(), u.window_end());
    if (end <= Valuation(u.valuation())) return PadicApprox::big_oh(ctx, end);
    const unsigned digits = static_cast<unsigned>(end.value() - u.valuation());
    return PadicApprox::from_parts(ctx, u.valuation(), u.unit(), digits);
  }
  const long v = std::min(a.valuation(), b.valuation());
  const Valuation vend = std::min(a.window_end(), b.window_end());
  if (vend <= Valuation(v)) return PadicApprox::big_oh(ctx, vend);
  const unsigned digits = static_cast<unsigned>(vend.value() - v);
  const Integer sum =
      a.unit() * ctx.power(static_cast<unsigned>(a.valuation() - v)) +
      b.unit() * ctx.power(static_cast<unsigned>(b.valuation() - v));
  return PadicApprox::from_parts(ctx, v, sum, digits);
}

PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) { return a + (-b); }

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
  require_same_ctx(a, b);
  const PadicCtx& ctx = a.ctx();
  if (!a.known_nonzero() || !b.known_nonzero()) {
    return PadicApprox::big_oh(ctx, a.valuation_lower_bound() + b.valuation_lower_bound());
  }
  const unsigned digits = std::min(a.digits(), b.digits());
  return PadicApprox::from_parts(ctx, a.valuation() + b.valuation(), a.unit() * b.unit(), digits);
}

std::string PadicApprox::str() const {
  const std::string p = ctx_.prime().value().get_str();
  if (is_exact_zero()) return "0";
  if (digits_ == 0) return "O(" + p + "^" + bound_.str() + ")";
  std::string head = unit_.get_str();
  if (valuation_ != 0) head += "*" + p + "^" + std::to_string(valuation_);
  return head + " + O(" + p + "^" + std::to_string(valuation_ + static_cast<long>(digits_)) + ")";
}

PadicApprox to_padic(const Rational& x, const PadicCtx& ctx) {
  if (x == 0) return PadicApprox::zero(ctx);
  Integer num = x.get_num();
  Integer den = x.get_den();
  const long vn = static_cast<long>(detail::remove_factor(num, ctx.prime().value()));
  const long vd = static_cast<long>(detail::remove_factor(den, ctx.prime().value()));
  const Integer u = detail::mod_nonneg(num, ctx.modulus()) *
                    detail::invert_mod(den, ctx.modulus());
  return PadicApprox::from_parts(ctx, vn - vd, u, ctx.precision());
}

bool agree(const PadicApprox& a, const PadicApprox& b) { return !(a - b).known_nonzero(); }

bool agree(const PadicApprox& a, const Rational& b) { return agree(a, to_padic(b, a.ctx())); }

namespace {

// Common entry guard for squareness decisions on approximations.
void require_decidable_square(const PadicApprox& x) {
  if (x.is_exact_zero()) throw ZeroInput("squareness of zero");
  if (!x.known_nonzero()) {
    throw PrecisionExhausted("squareness of " + x.str() + " is undetermined");
  }
  if (x.ctx().prime().is_two() && x.digits() < 3) {
    throw PrecisionExhausted("squareness at p = 2 needs 3 certified digits, have " +
                             std::to_string(x.digits()));
  }
}

}  // namespace

bool is_square(const PadicApprox& x) {
  require_decidable_square(x);
  if (x.valuation() % 2 != 0) return false;
  const Prime& p = x.ctx().prime();
  if (p.is_two()) return x.unit() % 8 == 1;
  return is_fp_square(FpElem{x.unit() % p.value()}, p);
}

SquareClass square_class(const PadicApprox& x) {
  require_decidable_square(x);
  const Prime& p = x.ctx().prime();
  const bool v_even = (x.valuation() % 2 == 0);
  if (p.is_two()) {
    const Integer u = x.unit() % 8;
    SquareClassTag tag;
    if (v_even) {
      tag = (u == 1)   ? SquareClassTag::Plus1
            : (u == 7) ? SquareClassTag::Minus1
            : (u == 5) ? SquareClassTag::Plus5
                       : SquareClassTag::Minus5;
    } else {
      tag = (u == 1)   ? SquareClassTag::Plus2
            : (u == 7) ? SquareClassTag::Minus2
            : (u == 5) ? SquareClassTag::Plus10
                       : SquareClassTag::Minus10;
    }
    return SquareClass::from_tag(tag, p);
  }
  const bool ac_square = is_fp_square(FpElem{x.unit() % p.value()}, p);
  SquareClassTag tag;
  if (v_even) {
    tag = ac_square ? SquareClassTag::One : SquareClassTag::U;
  } else {
    tag = ac_square ? SquareClassTag::P : SquareClassTag::UP;
  }
  return SquareClass::from_tag(tag, p);
}

namespace {

// Lift y0^2 == u mod p to y^2 == u mod p^digits by Newton iteration
// (digit-doubling); p odd.
Integer newton_lift_sqrt(const Integer& u, const Integer& y0, const PadicCtx& ctx,
                         unsigned digits) {
  Integer y = y0;
  unsigned have = 1;
  while (have < digits) {
    const unsigned next = std::min(2 * have, digits);
    const Integer& m = ctx.power(next);
    const Integer y_inv = detail::invert_mod(y, m);
    const Integer half = detail::invert_mod(Integer(2), m);
    y = detail::mod_nonneg((y + detail::mod_nonneg(u, m) * y_inv) * half, m);
    have = next;
  }
  return y;
}

// Lift a root of u mod 8 to y^2 == u mod 2^digits, keeping y == 1 mod 4.
Integer bitflip_lift_sqrt(const Integer& u, const PadicCtx& ctx, unsigned digits) {
  Integer y = 1;
  for (unsigned j = 3; j < digits; ++j) {
    const Integer& m = ctx.power(j + 1);
    if (detail::mod_nonneg(y * y - u, m) != 0) {
      y += ctx.power(j - 1);
    }
  }
  return y;
}

}  // namespace

PadicApprox sqrt(const PadicApprox& x) {
  if (x.is_exact_zero()) throw ZeroInput("square root of zero");
  if (!is_square(x)) {
    throw NotASquare("square root of the nonsquare " + x.str());
  }
  const PadicCtx& ctx = x.ctx();
  const long v = x.valuation();
  const unsigned d = x.digits();
  if (ctx.prime().is_two()) {
    const Integer y = bitflip_lift_sqrt(x.unit(), ctx, d);
    // Determination stops one digit short of the radicand's window; the
    // canonical representative is the root == 1 mod 4, which the lift
    // already maintains.
    return PadicApprox::from_parts(ctx, v / 2, detail::mod_nonneg(y, ctx.power(d - 1)), d - 1);
  }
  const Integer& p = ctx.prime().value();
  const Integer y0 = sqrt_mod_p(x.unit() % p, p);
  Integer y = newton_lift_sqrt(x.unit(), y0, ctx, d);
  // Canonical sign: smaller leading digit wins (the digit strings of the two
  // roots differ already in position 0).
  if (y % p > p - y % p) y = detail::mod_nonneg(-y, ctx.power(d));
  return PadicApprox::from_parts(ctx, v / 2, y, d);
}

namespace {

// If x is the square of a rational, report that root (the positive one).
bool rational_square_root(const Rational& x, Rational& out) {
  if (x <= 0) return false;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  out = make_rational(rn, rd);
  return true;
}

// The canonical-sign choice for an exactly known root, matching the digit
// convention used by sqrt().
Rational canonical_exact_root(const Rational& root, const Prime& p) {
  if (p.is_two()) {
    return (odd_part_mod(root, 2) == 1) ? root : -root;
  }
  const Integer d0 = angular_component(root, p).value;
  return (d0 <= p.value() - d0) ? root : -root;
}

}  // namespace

std::optional<Rational> rational_sqrt_canonical(const Rational& x, const Prime& p) {
  Rational root;
  if (!rational_square_root(x, root)) return std::nullopt;
  return canonical_exact_root(root, p);
}

PadicApprox hensel_sqrt(const Rational& x, const PadicCtx& ctx) {
  if (x == 0) throw ZeroInput("square root of zero");
  if (!is_square(x, ctx.prime())) {
    throw NotASquare("square root of the nonsquare " + to_string(x));
  }
  Rational exact_root;
  if (rational_square_root(x, exact_root)) {
    return to_padic(canonical_exact_root(exact_root, ctx.prime()), ctx);
  }
  return sqrt(to_padic(x, ctx));
}

namespace {

bool pow2k_rec_approx(const PadicApprox& y, unsigned k) {
  if (k == 0) return true;
  if (!is_square(y)) return false;
  const PadicApprox r = sqrt(y);
  return pow2k_rec_approx(r, k - 1) || pow2k_rec_approx(-r, k - 1);
}

bool pow2k_rec_exact(const Rational& x, const Prime& p, const PadicCtx& ctx, unsigned k) {
  if (k == 0) return true;
  if (!is_square(x, p)) return false;
  Rational s;
  if (rational_square_root(x, s)) {
    return pow2k_rec_exact(s, p, ctx, k - 1) || pow2k_rec_exact(-s, p, ctx, k - 1);
  }
  const PadicApprox r = sqrt(to_padic(x, ctx));
  return pow2k_rec_approx(r, k - 1) || pow2k_rec_approx(-r, k - 1);
}

}  // namespace

bool is_pow2k_power(const Rational& x, const Prime& p, unsigned k, unsigned precision) {
  if (x == 0) throw ZeroInput("power test of zero");
  const PadicCtx ctx(p, precision);
  return pow2k_rec_exact(x, p, ctx, k);
}

}  // namespace padicsl2
