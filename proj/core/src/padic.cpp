#include "padicsl2/padic.hpp"

#include <array>

#include "detail/modular.hpp"

namespace padicsl2 {

namespace {

// Deterministic strong pseudoprime test. With this fixed base set the test
// is known to be exact for all n < 3.317e24, which covers every prime this
// library is realistically asked to handle.
constexpr std::array<long, 12> kMrBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

const Integer kMrCertifiedBound("3317044064679887385961980");

bool strong_probable_prime(const Integer& n, const Integer& base) {
  const Integer b = detail::mod_nonneg(base, n);
  if (b == 0) return true;
  Integer d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  Integer x = detail::pow_mod(b, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

bool deterministic_is_prime(const Integer& n) {
  if (n < 2) return false;
  for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  if (n >= kMrCertifiedBound) {
    throw UnsupportedPrime("primality of " + n.get_str() +
                           " is outside the deterministically certified range");
  }
  for (long base : kMrBases) {
    if (!strong_probable_prime(n, Integer(base))) return false;
  }
  return true;
}

}  // namespace

Prime::Prime(Integer p) : p_(std::move(p)) {
  if (!deterministic_is_prime(p_)) {
    throw UnsupportedPrime(p_.get_str() + " is not prime");
  }
}

Valuation vp(const Integer& n, const Prime& p) {
  if (n == 0) return Valuation::infinity();
  Integer u = n;
  return Valuation(static_cast<long>(detail::remove_factor(u, p.value())));
}

Valuation vp(const Rational& x, const Prime& p) {
  if (x == 0) return Valuation::infinity();
  Integer num = x.get_num();
  Integer den = x.get_den();
  const long vn = static_cast<long>(detail::remove_factor(num, p.value()));
  const long vd = static_cast<long>(detail::remove_factor(den, p.value()));
  return Valuation(vn - vd);
}

FpElem residue(const Rational& x, const Prime& p) {
  const Valuation v = vp(x, p);
  if (!v.is_infinite() && v.value() < 0) {
    throw NegativeValuation("residue of " + to_string(x) + " with v_p = " + v.str());
  }
  if (x == 0) return FpElem{Integer(0)};
  const Integer num = detail::mod_nonneg(x.get_num(), p.value());
  const Integer den_inv = detail::invert_mod(x.get_den(), p.value());
  return FpElem{num * den_inv % p.value()};
}

FpElem angular_component(const Rational& x, const Prime& p) {
  if (x == 0) throw ZeroInput("angular component of zero");
  Integer num = x.get_num();
  Integer den = x.get_den();
  detail::remove_factor(num, p.value());
  detail::remove_factor(den, p.value());
  const Integer n = detail::mod_nonneg(num, p.value());
  const Integer d_inv = detail::invert_mod(den, p.value());
  return FpElem{n * d_inv % p.value()};
}

bool is_fp_square(const FpElem& c, const Prime& p) {
  if (detail::mod_nonneg(c.value, p.value()) == 0) throw ZeroInput("squareness of zero residue");
  if (p.is_two()) return true;
  const Integer e = (p.value() - 1) / 2;
  return detail::pow_mod(c.value, e, p.value()) == 1;
}

Integer odd_part_mod(const Rational& x, unsigned k) {
  if (x == 0) throw ZeroInput("odd part of zero");
  Integer num = x.get_num();
  Integer den = x.get_den();
  const Integer two(2);
  detail::remove_factor(num, two);
  detail::remove_factor(den, two);
  const Integer m = detail::pow_ui(two, k);
  // den is odd, so den^-1 == den mod 8; for general k use a real inverse.
  const Integer d_inv = detail::invert_mod(den, m);
  return detail::mod_nonneg(num * d_inv, m);
}

bool is_square(const Rational& x, const Prime& p) {
  if (x == 0) throw ZeroInput("squareness of zero");
  const long v = vp(x, p).value();
  if (v % 2 != 0) return false;
  if (p.is_two()) return odd_part_mod(x, 3) == 1;
  return is_fp_square(angular_component(x, p), p);
}

Rational find_nonresidue(const Prime& p) {
  if (p.is_two()) {
    throw UnsupportedPrime("no residue-field nonresidue exists for p = 2");
  }
  for (Integer c = 2; c < p.value(); ++c) {
    if (!is_fp_square(FpElem{c}, p)) return Rational(c);
  }
  throw UnsupportedPrime("no nonresidue below p; p = " + p.value().get_str() +
                         " is not an odd prime");
}

std::string SquareClass::label() const {
  switch (tag_) {
    case SquareClassTag::One: return "1";
    case SquareClassTag::U: return "u";
    case SquareClassTag::P: return "p";
    case SquareClassTag::UP: return "up";
    case SquareClassTag::Plus1: return "+1";
    case SquareClassTag::Minus1: return "-1";
    case SquareClassTag::Plus2: return "+2";
    case SquareClassTag::Minus2: return "-2";
    case SquareClassTag::Plus5: return "+5";
    case SquareClassTag::Minus5: return "-5";
    case SquareClassTag::Plus10: return "+10";
    case SquareClassTag::Minus10: return "-10";
  }
  throw Error("unreachable square class tag");
}

SquareClass SquareClass::from_tag(SquareClassTag tag, const Prime& p) {
  if (p.is_two()) {
    switch (tag) {
      case SquareClassTag::Plus1: return SquareClass(tag, Rational(1));
      case SquareClassTag::Minus1: return SquareClass(tag, Rational(-1));
      case SquareClassTag::Plus2: return SquareClass(tag, Rational(2));
      case SquareClassTag::Minus2: return SquareClass(tag, Rational(-2));
      case SquareClassTag::Plus5: return SquareClass(tag, Rational(5));
      case SquareClassTag::Minus5: return SquareClass(tag, Rational(-5));
      case SquareClassTag::Plus10: return SquareClass(tag, Rational(10));
      case SquareClassTag::Minus10: return SquareClass(tag, Rational(-10));
      default:
        throw UnsupportedPrime("odd-prime square class tag used with p = 2");
    }
  }
  switch (tag) {
    case SquareClassTag::One: return SquareClass(tag, Rational(1));
    case SquareClassTag::U: return SquareClass(tag, find_nonresidue(p));
    case SquareClassTag::P: return SquareClass(tag, Rational(p.value()));
    case SquareClassTag::UP:
      return SquareClass(tag, find_nonresidue(p) * Rational(p.value()));
    default:
      throw UnsupportedPrime("p = 2 square class tag used with odd p");
  }
}

SquareClass SquareClass::identity(const Prime& p) {
  return from_tag(p.is_two() ? SquareClassTag::Plus1 : SquareClassTag::One, p);
}

SquareClass SquareClass::from_label(const std::string& label, const Prime& p) {
  for (const auto& c : all(p)) {
    if (c.label() == label) return c;
  }
  throw ParseError("unknown square class label '" + label + "'");
}

std::vector<SquareClass> SquareClass::all(const Prime& p) {
  std::vector<SquareClass> out;
  if (p.is_two()) {
    for (auto tag : {SquareClassTag::Plus1, SquareClassTag::Minus1, SquareClassTag::Plus2,
                     SquareClassTag::Minus2, SquareClassTag::Plus5, SquareClassTag::Minus5,
                     SquareClassTag::Plus10, SquareClassTag::Minus10}) {
      out.push_back(from_tag(tag, p));
    }
  } else {
    for (auto tag :
         {SquareClassTag::One, SquareClassTag::U, SquareClassTag::P, SquareClassTag::UP}) {
      out.push_back(from_tag(tag, p));
    }
  }
  return out;
}

std::vector<SquareClass> SquareClass::nonidentity(const Prime& p) {
  auto classes = all(p);
  classes.erase(classes.begin());
  return classes;
}

SquareClass square_class(const Rational& x, const Prime& p) {
  if (x == 0) throw ZeroInput("square class of zero");
  const long v = vp(x, p).value();
  const bool v_even = (v % 2 == 0);
  if (p.is_two()) {
    const Integer u = odd_part_mod(x, 3);
    SquareClassTag tag;
    if (v_even) {
      tag = (u == 1)   ? SquareClassTag::Plus1
            : (u == 7) ? SquareClassTag::Minus1
            : (u == 5) ? SquareClassTag::Plus5
                       : SquareClassTag::Minus5;  // u == 3
    } else {
      tag = (u == 1)   ? SquareClassTag::Plus2
            : (u == 7) ? SquareClassTag::Minus2
            : (u == 5) ? SquareClassTag::Plus10
                       : SquareClassTag::Minus10;  // u == 3
    }
    return SquareClass::from_tag(tag, p);
  }
  const bool ac_square = is_fp_square(angular_component(x, p), p);
  SquareClassTag tag;
  if (v_even) {
    tag = ac_square ? SquareClassTag::One : SquareClassTag::U;
  } else {
    tag = ac_square ? SquareClassTag::P : SquareClassTag::UP;
  }
  return SquareClass::from_tag(tag, p);
}

SquareClass square_class_mul(const SquareClass& a, const SquareClass& b, const Prime& p) {
  return square_class(a.rep() * b.rep(), p);
}

}  // namespace padicsl2
