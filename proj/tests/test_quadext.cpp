#include "padicsl2/quadext.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "padicsl2/sampler.hpp"

using namespace padicsl2;

namespace {

QuadCtx make_ctx(long delta, long p) {
  return QuadCtx(Rational(delta), PadicCtx(Prime(p), 16));
}

std::set<std::string> labels(const std::vector<SquareClass>& classes) {
  std::set<std::string> out;
  for (const auto& c : classes) out.insert(c.label());
  return out;
}

}  // namespace

TEST(QuadCtx, CanonicalizesDelta) {
  // 50 and 2 sit in the same square class of Q_5, so they name the same
  // extension.
  const QuadCtx a = make_ctx(50, 5);
  const QuadCtx b = make_ctx(2, 5);
  EXPECT_TRUE(a == b);
  EXPECT_EQ(a.delta(), 2);
  EXPECT_EQ(a.delta_class().label(), "u");
  EXPECT_THROW(make_ctx(4, 5), Error);   // squares give no extension
  EXPECT_THROW(make_ctx(16, 2), Error);
}

TEST(QuadElem, ArithmeticAgainstHandValues) {
  const QuadCtx q = make_ctx(2, 5);
  const QuadElem<Rational> x{Rational(3), Rational(1), q};
  const QuadElem<Rational> y{Rational(1), Rational(-2), q};

  const auto xy = quad_mul(x, y);
  // (3 + sqrt2)(1 - 2 sqrt2) = 3 - 6 sqrt2 + sqrt2 - 4 = -1 - 5 sqrt2
  EXPECT_EQ(xy.alpha, -1);
  EXPECT_EQ(xy.beta, -5);

  EXPECT_EQ(quad_norm(x), 7);  // 9 - 2
  EXPECT_EQ(quad_conj(x).beta, -1);

  const auto xi = quad_inv(x);
  const auto one = quad_mul(x, xi);
  EXPECT_EQ(one.alpha, 1);
  EXPECT_EQ(one.beta, 0);
}

TEST(QuadElem, NormIsMultiplicative) {
  const QuadCtx q = make_ctx(-1, 7);
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    const auto r = [&] {
      return make_rational(Integer(rng.int_in(-9, 9)), Integer(rng.int_in(1, 9)));
    };
    const QuadElem<Rational> x{r(), r(), q};
    const QuadElem<Rational> y{r(), r(), q};
    EXPECT_EQ(quad_norm(quad_mul(x, y)), quad_norm(x) * quad_norm(y));
  }
}

TEST(QuadElem, MixedContextsRejected) {
  const QuadElem<Rational> x{Rational(1), Rational(1), make_ctx(2, 5)};
  const QuadElem<Rational> y{Rational(1), Rational(1), make_ctx(5, 5)};
  EXPECT_THROW(quad_mul(x, y), ContextMismatch);
}

// The norm subgroups, fixed by hand from the local square/norm tables and
// cross-checked below against actual norms.
TEST(NormClasses, OddPrimesIndexTwo) {
  struct Case {
    long p;
    const char* delta_label;
    std::set<std::string> expected;
  };
  const std::vector<Case> cases = {
      // p = 1 mod 4: -1 is a square, ramified extensions keep their own class.
      {5, "u", {"1", "u"}},
      {5, "p", {"1", "p"}},
      {5, "up", {"1", "up"}},
      {13, "u", {"1", "u"}},
      {13, "p", {"1", "p"}},
      {13, "up", {"1", "up"}},
      // p = 3 mod 4: -1 is a nonsquare, the two ramified classes swap.
      {3, "u", {"1", "u"}},
      {3, "p", {"1", "up"}},
      {3, "up", {"1", "p"}},
      {7, "u", {"1", "u"}},
      {7, "p", {"1", "up"}},
      {7, "up", {"1", "p"}},
  };
  for (const auto& c : cases) {
    const Prime p(c.p);
    const SquareClass delta = SquareClass::from_label(c.delta_label, p);
    const QuadCtx q(delta.rep(), PadicCtx(p, 16));
    EXPECT_EQ(labels(norm_classes(q)), c.expected)
        << "delta " << c.delta_label << " @ " << c.p;
  }
}

TEST(NormClasses, TwoIndexTwo) {
  struct Case {
    long delta;
    std::set<std::string> expected;
  };
  const std::vector<Case> cases = {
      {-1, {"+1", "+2", "+5", "+10"}},
      {5, {"+1", "-1", "+5", "-5"}},
      {-5, {"+1", "+5", "-2", "-10"}},
      {2, {"+1", "-1", "+2", "-2"}},
      {-2, {"+1", "-5", "+2", "-10"}},
      {10, {"+1", "-1", "+10", "-10"}},
      {-10, {"+1", "+10", "-5", "-2"}},
  };
  for (const auto& c : cases) {
    const QuadCtx q = make_ctx(c.delta, 2);
    EXPECT_EQ(labels(norm_classes(q)), c.expected) << "delta " << c.delta;
  }
}

TEST(NormClasses, ActualNormsLandInside) {
  for (long p : {2L, 3L, 5L, 7L, 13L}) {
    const Prime prime(p);
    for (const SquareClass& delta : SquareClass::nonidentity(prime)) {
      const QuadCtx q(delta.rep(), PadicCtx(prime, 16));
      const auto classes = labels(norm_classes(q));
      Rng rng(7 * p);
      for (int i = 0; i < 40; ++i) {
        const Rational a(rng.int_in(-20, 20));
        const Rational b(rng.int_in(-20, 20));
        const Rational n = a * a - delta.rep() * b * b;
        if (n == 0) continue;
        EXPECT_TRUE(classes.count(square_class(n, prime).label()))
            << "norm " << to_string(n) << " escaped delta=" << delta.label() << " @ " << p;
        EXPECT_TRUE(is_norm(n, q));
      }
    }
  }
}

TEST(IsNorm, ConstantOnSquareClassesAndGroupLike) {
  const QuadCtx q = make_ctx(2, 5);
  // Norm group of Q_5(sqrt 2): classes {1, u} with u = 2.
  EXPECT_TRUE(is_norm(Rational(1), q));
  EXPECT_TRUE(is_norm(Rational(2), q));
  EXPECT_TRUE(is_norm(Rational(98), q));  // 2 * 49
  EXPECT_FALSE(is_norm(Rational(5), q));
  EXPECT_FALSE(is_norm(Rational(10), q));
  EXPECT_FALSE(is_norm(make_rational(1, 5), q));
  EXPECT_THROW(is_norm(Rational(0), q), ZeroInput);

  // Closure: product of two norms is a norm, norm times non-norm is not.
  EXPECT_TRUE(is_norm(Rational(2) * Rational(98), q));
  EXPECT_FALSE(is_norm(Rational(2) * Rational(5), q));
}

TEST(IsNorm, SquareDiscriminantRefusedAtContext) {
  // A square delta never reaches is_norm: the context refuses it up front.
  EXPECT_THROW(make_ctx(9, 5), Error);
}
