#pragma once

// Small modular-arithmetic helpers shared by the implementation files.
// Not installed; not part of the public interface.

#include <gmpxx.h>

#include "padicsl2/errors.hpp"

namespace padicsl2::detail {

// n mod m with result in [0, m), regardless of the sign of n.
inline mpz_class mod_nonneg(const mpz_class& n, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

// base^exp mod m.
inline mpz_class pow_mod(const mpz_class& base, const mpz_class& exp, const mpz_class& m) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Inverse of n mod m; throws NotInvertible if gcd(n, m) != 1.
inline mpz_class invert_mod(const mpz_class& n, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw NotInvertible("no inverse of " + n.get_str() + " mod " + m.get_str());
  }
  return r;
}

// p^k.
inline mpz_class pow_ui(const mpz_class& p, unsigned long k) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), k);
  return r;
}

// Largest e with p^e | n, together with n / p^e. n must be nonzero.
inline unsigned long remove_factor(mpz_class& n, const mpz_class& p) {
  mpz_class reduced;
  const auto e = mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  n = reduced;
  return static_cast<unsigned long>(e);
}

}  // namespace padicsl2::detail
