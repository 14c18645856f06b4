#include "padicsl2/cartan.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "padicsl2/sampler.hpp"
#include "padicsl2/sl2core.hpp"

using namespace padicsl2;

namespace {

Mat2<Rational> m2(long a, long b, long c, long d) {
  return Mat2<Rational>{Rational(a), Rational(b), Rational(c), Rational(d)};
}

SL2Mat<Rational> sl2(long a, long b, long c, long d) { return SL2Mat<Rational>(m2(a, b, c, d)); }

SL2Mat<Rational> diag(const Rational& a) {
  return SL2Mat<Rational>(Mat2<Rational>{a, Rational(0), Rational(0), scalar_inv(a)});
}

TEST(Discriminant, HandValues) {
  EXPECT_EQ(discriminant(omega()), Rational(-4));
  EXPECT_EQ(discriminant(diag(Rational(5))), make_rational(576, 25));
  EXPECT_EQ(discriminant(sl2(3, 2, 4, 3)), Rational(32));
}

TEST(Classify, CentralAndUnipotentCases) {
  const Prime p5(5);
  EXPECT_EQ(classify(identity_sl2(), p5).kind, ClassKind::CentralPlus);
  EXPECT_EQ(classify(-identity_sl2(), p5).kind, ClassKind::CentralMinus);
  EXPECT_EQ(classify(sl2(1, 3, 0, 1), p5).kind, ClassKind::UnipotentPlus);
  EXPECT_EQ(classify(sl2(1, 0, 4, 1), p5).kind, ClassKind::UnipotentPlus);
  EXPECT_EQ(classify(sl2(-1, 1, 0, -1), p5).kind, ClassKind::UnipotentMinus);
  EXPECT_FALSE(classify(sl2(1, 3, 0, 1), p5).delta_class.has_value());
  EXPECT_FALSE(classify(identity_sl2(), p5).norm_class_is_trivial.has_value());
}

TEST(Classify, SplitVersusNonsplitDependsOnThePrime) {
  // disc(omega) = -4: a square in Q_5 (-4 = 1 mod 5), not in Q_7, and of
  // class -1 in Q_2 (odd part -1 = 7 mod 8).
  EXPECT_EQ(classify(omega(), Prime(5)).kind, ClassKind::Split);

  const auto at7 = classify(omega(), Prime(7));
  EXPECT_EQ(at7.kind, ClassKind::Nonsplit);
  ASSERT_TRUE(at7.delta_class.has_value());
  EXPECT_EQ(at7.delta_class->label(), "u");

  const auto at2 = classify(omega(), Prime(2));
  EXPECT_EQ(at2.kind, ClassKind::Nonsplit);
  EXPECT_EQ(at2.delta_class->label(), "-1");

  // disc 12 = 4*3: 3 is a nonresidue mod 5 but a square mod 13.
  EXPECT_EQ(classify(sl2(2, 1, 3, 2), Prime(5)).kind, ClassKind::Nonsplit);
  EXPECT_EQ(classify(sl2(2, 1, 3, 2), Prime(13)).kind, ClassKind::Split);

  EXPECT_EQ(classify(diag(Rational(5)), Prime(5)).kind, ClassKind::Split);
  EXPECT_EQ(classify(sl2(-3, -2, -4, -3), Prime(5)).delta_class->label(), "u");

  // trace 9: disc 77 = 7*11 has odd valuation at 7 and square cofactor.
  const auto ramified = classify(sl2(9, 1, -1, 0), Prime(7));
  EXPECT_EQ(ramified.kind, ClassKind::Nonsplit);
  EXPECT_EQ(ramified.delta_class->label(), "p");
}

TEST(Classify, InvariantUnderConjugation) {
  const auto g = m2(2, 1, 3, 2);  // det 1
  for (long p : {2L, 5L, 7L}) {
    const Prime prime(p);
    SamplerConfig cfg;
    cfg.seed = 23 + static_cast<std::uint64_t>(p);
    Sl2Sampler sampler(cfg);
    for (int i = 0; i < 40; ++i) {
      const auto a = sampler.next();
      const auto cls = classify(a, prime);
      const auto moved = classify(conjugate(a, g), prime);
      EXPECT_EQ(moved.kind, cls.kind);
      EXPECT_EQ(moved.delta_class.has_value(), cls.delta_class.has_value());
      if (cls.delta_class) EXPECT_EQ(moved.delta_class->label(), cls.delta_class->label());
    }
  }
}

TEST(Diagonalize, AlreadyDiagonalIsItsOwnForm) {
  const PadicCtx ctx(Prime(5), 16);
  const auto a = diag(Rational(3));
  const auto c = diagonalize(a, ctx);
  ASSERT_TRUE(conjugator_is_exact(c));
  const auto& exact = std::get<ConjugatorT<Rational>>(c);
  EXPECT_EQ(exact.P, identity_mat());
  EXPECT_EQ(exact.target, a);
  EXPECT_TRUE(conjugator_det_class(c).is_identity());
}

TEST(Diagonalize, RationalEigenvaluesStayExact) {
  const PadicCtx ctx(Prime(5), 16);
  // P0^-1 diag(5,1/5) P0 with P0 = [[1,1],[0,1]]; eigenvalues 5 and 1/5.
  const auto a = conjugate(diag(Rational(5)), m2(1, 1, 0, 1));
  const auto c = diagonalize(a, ctx);
  ASSERT_TRUE(conjugator_is_exact(c));
  const auto& exact = std::get<ConjugatorT<Rational>>(c);

  // The canonical square root of 576/25 in Q_5 is -24/5 (leading digit 1,
  // against 4 for +24/5), so lambda = (26/5 - 24/5)/2 = 1/5 comes first.
  EXPECT_EQ(exact.target, diag(make_rational(1, 5)));
  EXPECT_EQ(exact.P.det(), Rational(1));
  EXPECT_TRUE(conjugator_det_class(c).is_identity());
  EXPECT_TRUE(conjugator_roundtrip_ok(a, c, ctx));
  EXPECT_EQ(conjugate(a, exact.P), exact.target);
}

TEST(Diagonalize, HenselEigenvaluesAtLowPrecision) {
  const PadicCtx ctx(Prime(5), 4);
  const auto c = diagonalize(omega(), ctx);
  ASSERT_FALSE(conjugator_is_exact(c));
  const auto& approx = std::get<ConjugatorT<PadicApprox>>(c);

  // sqrt(-4) mod 5^4 is +-364; the canonical root is -364 = 261, so
  // lambda_1 = 261/2 = 443 and lambda_2 = 182 mod 625.
  const auto& t = approx.target.mat();
  EXPECT_EQ(t.a11.valuation(), Valuation(0));
  EXPECT_EQ(t.a11.unit(), 443);
  EXPECT_EQ(t.a22.unit(), 182);
  EXPECT_EQ(t.a11.digits(), 4u);
  EXPECT_TRUE(t.a12.is_exact_zero());

  EXPECT_TRUE(conjugator_det_class(c).is_identity());
  EXPECT_TRUE(conjugator_roundtrip_ok(omega(), c, ctx));
}

TEST(Diagonalize, RequiresASplitMatrix) {
  EXPECT_THROW(diagonalize(omega(), PadicCtx(Prime(7), 8)), NotSplit);
  EXPECT_THROW(diagonalize(identity_sl2(), PadicCtx(Prime(5), 8)), NotSplit);
  EXPECT_THROW(diagonalize(sl2(1, 3, 0, 1), PadicCtx(Prime(5), 8)), NotSplit);
}

TEST(QdeltaForm, StandardCopyIsItsOwnForm) {
  const PadicCtx ctx(Prime(5), 16);
  const auto a = sl2(3, 2, 4, 3);  // [[alpha,beta],[beta*2,alpha]] already
  const auto c = qdelta_form(a, ctx);
  ASSERT_TRUE(conjugator_is_exact(c));
  const auto& exact = std::get<ConjugatorT<Rational>>(c);
  EXPECT_EQ(exact.P, identity_mat());
  EXPECT_EQ(exact.target, a);
  EXPECT_TRUE(conjugator_det_class(c).is_identity());
}

TEST(QdeltaForm, RationalBetaStaysExact) {
  const PadicCtx ctx(Prime(5), 16);
  // [[3,2],[4,3]] conjugated by [[1,0],[1,1]]; disc 32, delta rep 2,
  // ratio 16 with canonical root -4, so beta = -2.
  const auto a = sl2(5, 2, 2, 1);
  const auto c = qdelta_form(a, ctx);
  ASSERT_TRUE(conjugator_is_exact(c));
  const auto& exact = std::get<ConjugatorT<Rational>>(c);

  EXPECT_EQ(exact.target, sl2(3, -2, -4, 3));
  EXPECT_EQ(exact.target.trace(), a.trace());
  EXPECT_TRUE(subgroup_membership(exact.target,
                                  SubgroupTag::qdelta(SquareClass::from_label("u", Prime(5)))));
  EXPECT_TRUE(conjugator_det_class(c).is_identity());  // det P = -4, a square
  EXPECT_EQ(conjugate(a, exact.P), exact.target);
}

TEST(QdeltaForm, HenselBetaAtFinitePrecision) {
  const PadicCtx ctx(Prime(5), 8);
  // trace 1: disc -3 is a nonresidue mod 5, ratio -3/2 has no rational
  // root, so beta comes out of the lift.
  const auto a = sl2(0, 1, -1, 1);
  const auto c = qdelta_form(a, ctx);
  ASSERT_FALSE(conjugator_is_exact(c));
  const auto& approx = std::get<ConjugatorT<PadicApprox>>(c);

  const auto& t = approx.target.mat();
  EXPECT_TRUE(agree(t.a11, make_rational(1, 2)));
  EXPECT_TRUE(agree(t.a22, make_rational(1, 2)));
  EXPECT_TRUE(agree(t.a21, t.a12 + t.a12));  // a21 = beta * delta with delta = 2
  EXPECT_TRUE(conjugator_roundtrip_ok(a, c, ctx));

  // det P = beta = 3 mod 5: class u. That is a norm of Q_5(sqrt 2), so the
  // SL2 orbit is the standard one.
  EXPECT_EQ(conjugator_det_class(c).label(), "u");
  EXPECT_TRUE(orbit_refinement(a, ctx));
}

TEST(QdeltaForm, RequiresANonsplitMatrix) {
  const PadicCtx ctx(Prime(5), 8);
  EXPECT_THROW(qdelta_form(diag(Rational(5)), ctx), NotNonsplit);
  EXPECT_THROW(qdelta_form(omega(), ctx), NotNonsplit);  // split at 5
  EXPECT_THROW(qdelta_form(identity_sl2(), ctx), NotNonsplit);
}

TEST(UnipotentForm, MovesIntoTheStandardCopy) {
  const Prime p5(5);
  const auto a = sl2(1, 0, 4, 1);
  const auto c = unipotent_form(a, p5);
  ASSERT_TRUE(conjugator_is_exact(c));
  const auto& exact = std::get<ConjugatorT<Rational>>(c);

  EXPECT_EQ(exact.target.mat(),
            (Mat2<Rational>{Rational(1), make_rational(-1, 4), Rational(0), Rational(1)}));
  EXPECT_EQ(exact.P.det(), Rational(1));
  EXPECT_TRUE(conjugator_det_class(c).is_identity());
  EXPECT_EQ(conjugate(a, exact.P), exact.target);

  const auto minus = unipotent_form(-a, p5);
  const auto& mexact = std::get<ConjugatorT<Rational>>(minus);
  EXPECT_TRUE(subgroup_membership(mexact.target, SubgroupTag::u()));
  EXPECT_FALSE(subgroup_membership(mexact.target, SubgroupTag::uplus()));
  EXPECT_EQ(conjugate(-a, mexact.P), mexact.target);
}

TEST(UnipotentForm, RandomConjugatesRoundTrip) {
  const Prime p5(5);
  SamplerConfig cfg;
  cfg.seed = 31;
  Sl2Sampler sampler(cfg);
  for (int i = 0; i < 40; ++i) {
    const auto u = random_unipotent(sampler.rng(), 9);
    const auto a = conjugate(u, sampler.next().mat());
    const auto c = unipotent_form(a, p5);
    const auto& exact = std::get<ConjugatorT<Rational>>(c);
    EXPECT_TRUE(subgroup_membership(exact.target, SubgroupTag::u()));
    EXPECT_FALSE(exact.target == identity_sl2());
    EXPECT_FALSE(exact.target == -identity_sl2());
    EXPECT_EQ(conjugate(a, exact.P), exact.target);
  }
}

TEST(UnipotentForm, RejectsEverythingElse) {
  const Prime p5(5);
  EXPECT_THROW(unipotent_form(identity_sl2(), p5), NotUnipotent);
  EXPECT_THROW(unipotent_form(-identity_sl2(), p5), NotUnipotent);
  EXPECT_THROW(unipotent_form(sl2(3, 2, 4, 3), p5), NotUnipotent);
  EXPECT_THROW(unipotent_form(diag(Rational(5)), p5), NotUnipotent);
}

TEST(OrbitRefinement, SeparatesSL2OrbitsInsideTheGL2Class) {
  const PadicCtx ctx(Prime(5), 16);

  // SL2-conjugates of the standard copy.
  EXPECT_TRUE(orbit_refinement(sl2(3, 2, 4, 3), ctx));
  EXPECT_TRUE(orbit_refinement(sl2(5, 2, 2, 1), ctx));

  // Twisting by diag(5,1) leaves the GL2 class but changes det(P) to the
  // class p, which is not a norm of Q_5(sqrt 2).
  const auto twisted = SL2Mat<Rational>(
      Mat2<Rational>{Rational(3), make_rational(2, 5), Rational(20), Rational(3)});
  EXPECT_FALSE(orbit_refinement(twisted, ctx));

  const auto twisted2 = SL2Mat<Rational>(
      Mat2<Rational>{Rational(3), Rational(10), make_rational(4, 5), Rational(3)});
  EXPECT_FALSE(orbit_refinement(twisted2, ctx));
}

TEST(OrbitRefinement, InvariantUnderSL2Conjugation) {
  const PadicCtx ctx(Prime(5), 16);
  SamplerConfig cfg;
  cfg.seed = 41;
  Sl2Sampler sampler(cfg);
  const std::vector<SL2Mat<Rational>> seeds = {
      sl2(3, 2, 4, 3),
      sl2(0, 1, -1, 1),
      SL2Mat<Rational>(
          Mat2<Rational>{Rational(3), make_rational(2, 5), Rational(20), Rational(3)}),
  };
  for (const auto& a : seeds) {
    const bool expected = orbit_refinement(a, ctx);
    for (int i = 0; i < 15; ++i) {
      EXPECT_EQ(orbit_refinement(conjugate(a, sampler.next().mat()), ctx), expected);
    }
  }
}

TEST(OrbitRefinement, RequiresANonsplitMatrix) {
  EXPECT_THROW(orbit_refinement(diag(Rational(5)), PadicCtx(Prime(5), 8)), NotNonsplit);
}

TEST(VerifyPartition, CountsAndExclusivity) {
  const std::vector<SL2Mat<Rational>> sample5 = {
      identity_sl2(), -identity_sl2(), omega(), sl2(1, 1, 0, 1), diag(Rational(3)),
  };
  const auto r5 = verify_partition(sample5, Prime(5));
  EXPECT_EQ(r5.total, 5u);
  EXPECT_TRUE(r5.exclusive_exhaustive);
  EXPECT_EQ(r5.kind_counts.at("CentralPlus"), 1u);
  EXPECT_EQ(r5.kind_counts.at("CentralMinus"), 1u);
  EXPECT_EQ(r5.kind_counts.at("Split"), 2u);  // omega and diag(3) both split at 5
  EXPECT_EQ(r5.kind_counts.at("UnipotentPlus"), 1u);
  EXPECT_TRUE(r5.nonsplit_delta_counts.empty());

  const std::vector<SL2Mat<Rational>> sample7 = {
      omega(), sl2(2, 1, 3, 2), sl2(9, 1, -1, 0), identity_sl2(),
  };
  const auto r7 = verify_partition(sample7, Prime(7));
  EXPECT_EQ(r7.total, 4u);
  EXPECT_TRUE(r7.exclusive_exhaustive);
  EXPECT_EQ(r7.kind_counts.at("Nonsplit"), 3u);
  EXPECT_EQ(r7.nonsplit_delta_counts.at("u"), 2u);
  EXPECT_EQ(r7.nonsplit_delta_counts.at("p"), 1u);

  EXPECT_EQ(verify_partition({}, Prime(5)).total, 0u);
  EXPECT_TRUE(verify_partition({}, Prime(5)).exclusive_exhaustive);
}

}  // namespace
