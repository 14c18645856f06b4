#include "padicsl2/sampler.hpp"

namespace padicsl2 {

Rational Sl2Sampler::next_rational() {
  const long h = config_.height;
  const long num = rng_.int_in(-h, h);
  const long den = rng_.int_in(1, h);
  return make_rational(Integer(num), Integer(den));
}

SL2Mat<Rational> Sl2Sampler::next() {
  Mat2<Rational> acc{1, 0, 0, 1};
  const unsigned k = 1 + static_cast<unsigned>(rng_.below(config_.max_factors));
  for (unsigned i = 0; i < k; ++i) {
    const Rational r = next_rational();
    const Mat2<Rational> e = rng_.coin() ? Mat2<Rational>{1, r, 0, 1}
                                         : Mat2<Rational>{1, 0, r, 1};
    acc = acc * e;
  }
  return SL2Mat<Rational>(acc);
}

SL2Mat<Rational> random_q1_element(Rng& rng, long height) {
  long num = 0;
  long den = 1;
  while (num == 0) {
    num = rng.int_in(-height, height);
    den = rng.int_in(1, height);
  }
  const Rational a = make_rational(Integer(num), Integer(den));
  return SL2Mat<Rational>(Mat2<Rational>{a, 0, 0, Rational(1) / a});
}

SL2Mat<Rational> random_qdelta_element(Rng& rng, const SquareClass& delta, long height) {
  const Rational& d = delta.rep();
  Rational t = 0;
  while (t == 0) {
    const long num = rng.int_in(-height, height);
    const long den = rng.int_in(1, height);
    t = make_rational(Integer(num), Integer(den));
  }
  // d*t^2 != 1 because d is a nonsquare, so the denominator never vanishes.
  const Rational w = 1 - d * t * t;
  Rational a = (1 + d * t * t) / w;
  Rational b = 2 * t / w;
  if (rng.coin()) {
    a = -a;
    b = -b;
  }
  return SL2Mat<Rational>(Mat2<Rational>{a, b, b * d, a});
}

SL2Mat<Rational> random_unipotent(Rng& rng, long height) {
  Rational u = 0;
  while (u == 0) {
    const long num = rng.int_in(-height, height);
    const long den = rng.int_in(1, height);
    u = make_rational(Integer(num), Integer(den));
  }
  const Rational s = rng.coin() ? 1 : -1;
  return SL2Mat<Rational>(Mat2<Rational>{s, s * u, 0, s});
}

}  // namespace padicsl2
