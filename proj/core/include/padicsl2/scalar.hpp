#pragma once

// Uniform helpers over the two scalar types the templated algebra runs on:
// exact rationals and approximate p-adics.

#include "padicsl2/padic_approx.hpp"
#include "padicsl2/rational.hpp"

namespace padicsl2 {

inline Rational scalar_inv(const Rational& x) {
  if (x == 0) throw NotInvertible("inverse of zero");
  return Rational(1) / x;
}
inline PadicApprox scalar_inv(const PadicApprox& x) { return x.inv(); }

// Provably nonzero (exact nonzero resp. at least one certified digit).
inline bool scalar_known_nonzero(const Rational& x) { return x != 0; }
inline bool scalar_known_nonzero(const PadicApprox& x) { return x.known_nonzero(); }

// Equal to the exact rational c, resp. consistent with it through the
// certified window.
inline bool scalar_matches(const Rational& x, const Rational& c) { return x == c; }
inline bool scalar_matches(const PadicApprox& x, const Rational& c) { return agree(x, c); }

inline std::string scalar_str(const Rational& x) { return to_string(x); }
inline std::string scalar_str(const PadicApprox& x) { return x.str(); }

}  // namespace padicsl2
