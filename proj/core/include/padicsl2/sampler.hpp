#pragma once

#include <cstdint>

#include "padicsl2/mat2.hpp"
#include "padicsl2/padic.hpp"

namespace padicsl2 {

// SplitMix64. Tiny, fully specified, and identical on every platform;
// std:: distributions are avoided because their streams are not portable
// across standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n >= 1. Rejection keeps it exactly uniform.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  // Uniform integer in [lo, hi], inclusive.
  long int_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return next() & 1; }

private:
  std::uint64_t state_;
};

struct SamplerConfig {
  std::uint64_t seed = 0;
  unsigned max_factors = 12;  // elementary factors per sampled matrix
  long height = 9;            // bound on |numerator| and denominator of entries
};

// Random SL2(Q) elements: seeded products of at most max_factors elementary
// matrices [[1,r],[0,1]] and [[1,0],[r,1]] with bounded-height rational r
// (zero allowed, so short products and the identity stay reachable).
// Determinant 1 holds exactly by construction.
class Sl2Sampler {
public:
  explicit Sl2Sampler(const SamplerConfig& config) : config_(config), rng_(config.seed) {}

  SL2Mat<Rational> next();
  // Bounded-height rational, possibly zero or negative.
  Rational next_rational();

  Rng& rng() { return rng_; }
  const SamplerConfig& config() const { return config_; }

private:
  SamplerConfig config_;
  Rng rng_;
};

// Subgroup-targeted samples for the verification suites.

// diag(a, 1/a) with a != 0 (a = +-1 allowed; callers wanting regular
// elements should reject +-I).
SL2Mat<Rational> random_q1_element(Rng& rng, long height);

// Element of the standard Q_delta via the conic parametrization
// a = (1 + delta t^2)/(1 - delta t^2), b = 2t/(1 - delta t^2), t != 0,
// with a random global sign.
SL2Mat<Rational> random_qdelta_element(Rng& rng, const SquareClass& delta, long height);

// +-[[1,u],[0,1]] with u != 0.
SL2Mat<Rational> random_unipotent(Rng& rng, long height);

}  // namespace padicsl2
