#include "padicsl2/cartan.hpp"

#include "padicsl2/quadext.hpp"
#include "padicsl2/sl2core.hpp"

namespace padicsl2 {

std::string kind_label(ClassKind kind) {
  switch (kind) {
    case ClassKind::CentralPlus: return "CentralPlus";
    case ClassKind::CentralMinus: return "CentralMinus";
    case ClassKind::UnipotentPlus: return "UnipotentPlus";
    case ClassKind::UnipotentMinus: return "UnipotentMinus";
    case ClassKind::Split: return "Split";
    case ClassKind::Nonsplit: return "Nonsplit";
  }
  throw Error("unreachable class kind");
}

Rational discriminant(const SL2Mat<Rational>& a) {
  const Rational t = a.trace();
  return t * t - 4;
}

ConjugacyClass classify(const SL2Mat<Rational>& a, const Prime& p) {
  if (a == identity_sl2()) return {ClassKind::CentralPlus, std::nullopt, std::nullopt};
  if (a == -identity_sl2()) return {ClassKind::CentralMinus, std::nullopt, std::nullopt};
  const Rational disc = discriminant(a);
  if (disc == 0) {
    const ClassKind kind =
        (a.trace() == 2) ? ClassKind::UnipotentPlus : ClassKind::UnipotentMinus;
    return {kind, std::nullopt, std::nullopt};
  }
  if (is_square(disc, p)) return {ClassKind::Split, std::nullopt, std::nullopt};
  return {ClassKind::Nonsplit, square_class(disc, p), std::nullopt};
}

bool conjugator_is_exact(const Conjugator& c) {
  return std::holds_alternative<ConjugatorT<Rational>>(c);
}

const SquareClass& conjugator_det_class(const Conjugator& c) {
  return std::visit([](const auto& v) -> const SquareClass& { return v.det_class; }, c);
}

bool conjugator_roundtrip_ok(const SL2Mat<Rational>& a, const Conjugator& c,
                             const PadicCtx& ctx) {
  if (const auto* exact = std::get_if<ConjugatorT<Rational>>(&c)) {
    return conjugate(a, exact->P) == exact->target;
  }
  const auto& approx = std::get<ConjugatorT<PadicApprox>>(c);
  const SL2Mat<PadicApprox> lifted = to_padic(a, ctx);
  return agree(conjugate(lifted, approx.P).mat(), approx.target.mat());
}

namespace {

// Internal consistency check on a freshly built conjugator; the
// constructions below guarantee it algebraically, so a failure means a bug.
template <class S>
void self_check(const SL2Mat<Rational>& a, const ConjugatorT<S>& c, const PadicCtx& ctx) {
  if (!conjugator_roundtrip_ok(a, Conjugator(c), ctx)) {
    throw Error("conjugator failed its roundtrip self-check");
  }
}

PadicApprox halve(const PadicApprox& x) {
  return x * to_padic(Rational(1, 2), x.ctx());
}

}  // namespace

Conjugator diagonalize(const SL2Mat<Rational>& a, const PadicCtx& ctx) {
  const ConjugacyClass cls = classify(a, ctx.prime());
  if (cls.kind != ClassKind::Split) {
    throw NotSplit("diagonalize requires a split semisimple matrix, got " +
                   kind_label(cls.kind));
  }
  const Mat2<Rational>& m = a.mat();
  const Rational tr = a.trace();
  const Rational disc = discriminant(a);

  if (m.a12 == 0 && m.a21 == 0) {
    // Already diagonal.
    ConjugatorT<Rational> c{identity_mat(), a, SquareClass::identity(ctx.prime())};
    self_check(a, c, ctx);
    return c;
  }

  if (const auto root = rational_sqrt_canonical(disc, ctx.prime())) {
    // Exact path: rational eigenvalues.
    const Rational l1 = (tr + *root) / 2;
    const Rational l2 = (tr - *root) / 2;
    Mat2<Rational> p_mat = (m.a12 != 0)
                               ? Mat2<Rational>{m.a12, m.a12, l1 - m.a11, l2 - m.a11}
                               : Mat2<Rational>{l1 - m.a22, l2 - m.a22, m.a21, m.a21};
    const Rational dp = p_mat.det();
    p_mat.a11 /= dp;
    p_mat.a21 /= dp;
    ConjugatorT<Rational> c{p_mat,
                            SL2Mat<Rational>(Mat2<Rational>{l1, 0, 0, l2}),
                            SquareClass::identity(ctx.prime())};
    self_check(a, c, ctx);
    return c;
  }

  // Approximate path: eigenvalues through Hensel lifting.
  const PadicApprox root = hensel_sqrt(disc, ctx);
  const PadicApprox tra = to_padic(tr, ctx);
  const PadicApprox l1 = halve(tra + root);
  const PadicApprox l2 = halve(tra - root);
  const PadicApprox zero = PadicApprox::zero(ctx);
  const PadicApprox a11 = to_padic(m.a11, ctx);
  const PadicApprox a22 = to_padic(m.a22, ctx);
  Mat2<PadicApprox> p_mat =
      (m.a12 != 0)
          ? Mat2<PadicApprox>{to_padic(m.a12, ctx), to_padic(m.a12, ctx), l1 - a11, l2 - a11}
          : Mat2<PadicApprox>{l1 - a22, l2 - a22, to_padic(m.a21, ctx), to_padic(m.a21, ctx)};
  const PadicApprox dp_inv = p_mat.det().inv();
  p_mat.a11 = p_mat.a11 * dp_inv;
  p_mat.a21 = p_mat.a21 * dp_inv;
  ConjugatorT<PadicApprox> c{p_mat,
                             SL2Mat<PadicApprox>(Mat2<PadicApprox>{l1, zero, zero, l2}),
                             SquareClass::identity(ctx.prime())};
  self_check(a, c, ctx);
  return c;
}

Conjugator qdelta_form(const SL2Mat<Rational>& a, const PadicCtx& ctx) {
  const ConjugacyClass cls = classify(a, ctx.prime());
  if (cls.kind != ClassKind::Nonsplit) {
    throw NotNonsplit("qdelta_form requires a nonsplit semisimple matrix, got " +
                      kind_label(cls.kind));
  }
  const SquareClass& delta_cls = *cls.delta_class;
  const Rational& delta = delta_cls.rep();
  const Mat2<Rational>& m = a.mat();

  if (subgroup_membership(a, SubgroupTag::qdelta(delta_cls))) {
    ConjugatorT<Rational> c{identity_mat(), a, SquareClass::identity(ctx.prime())};
    self_check(a, c, ctx);
    return c;
  }

  const Rational tr = a.trace();
  const Rational alpha = tr / 2;
  const Rational ratio = discriminant(a) / delta;  // in the trivial square class

  if (const auto root = rational_sqrt_canonical(ratio, ctx.prime())) {
    const Rational beta = *root / 2;
    // A nonsplit matrix is never triangular, so one of a12, a21 is nonzero.
    const Mat2<Rational> p_mat = (m.a12 != 0)
                                     ? Mat2<Rational>{m.a12, 0, alpha - m.a11, beta}
                                     : Mat2<Rational>{alpha - m.a22, beta, m.a21, 0};
    const SL2Mat<Rational> target(Mat2<Rational>{alpha, beta, beta * delta, alpha});
    ConjugatorT<Rational> c{p_mat, target, square_class(p_mat.det(), ctx.prime())};
    self_check(a, c, ctx);
    return c;
  }

  const PadicApprox beta = halve(hensel_sqrt(ratio, ctx));
  const PadicApprox alpha_a = to_padic(alpha, ctx);
  const PadicApprox delta_a = to_padic(delta, ctx);
  const PadicApprox zero = PadicApprox::zero(ctx);
  const Mat2<PadicApprox> p_mat =
      (m.a12 != 0)
          ? Mat2<PadicApprox>{to_padic(m.a12, ctx), zero, alpha_a - to_padic(m.a11, ctx), beta}
          : Mat2<PadicApprox>{alpha_a - to_padic(m.a22, ctx), beta, to_padic(m.a21, ctx), zero};
  const SL2Mat<PadicApprox> target(
      Mat2<PadicApprox>{alpha_a, beta, beta * delta_a, alpha_a});
  ConjugatorT<PadicApprox> c{p_mat, target, square_class(p_mat.det())};
  self_check(a, c, ctx);
  return c;
}

Conjugator unipotent_form(const SL2Mat<Rational>& a, const Prime& p) {
  // Only the trace matters for the construction; p labels the det class.
  const Rational tr = a.trace();
  const bool plus = (tr == 2);
  if ((tr != 2 && tr != -2) || a == identity_sl2() || a == -identity_sl2()) {
    throw NotUnipotent("unipotent_form requires trace +-2 and A != +-I");
  }
  const Rational sign = plus ? 1 : -1;
  const Mat2<Rational> n = sign * a.mat() - identity_mat();  // nilpotent, nonzero

  // v = e1 unless N kills it, then e2; w = Nv.
  const bool use_e1 = (n.a11 != 0 || n.a21 != 0);
  const Rational v1 = use_e1 ? 1 : 0;
  const Rational v2 = use_e1 ? 0 : 1;
  const Rational w1 = use_e1 ? n.a11 : n.a12;
  const Rational w2 = use_e1 ? n.a21 : n.a22;

  const Rational d = w1 * v2 - w2 * v1;  // det [w | v], nonzero
  const Mat2<Rational> p_mat{w1, v1 / d, w2, v2 / d};
  const Rational u = Rational(1) / d;
  const SL2Mat<Rational> target(Mat2<Rational>{sign, sign * u, 0, sign});

  ConjugatorT<Rational> c{p_mat, target, SquareClass::identity(p)};
  if (!(conjugate(a, p_mat) == target)) {
    throw Error("conjugator failed its roundtrip self-check");
  }
  return c;
}

bool orbit_refinement(const SL2Mat<Rational>& a, const PadicCtx& ctx) {
  const ConjugacyClass cls = classify(a, ctx.prime());
  if (cls.kind != ClassKind::Nonsplit) {
    throw NotNonsplit("orbit refinement only applies to nonsplit matrices");
  }
  const Conjugator conj = qdelta_form(a, ctx);
  const QuadCtx qctx(cls.delta_class->rep(), ctx);
  return is_norm(conjugator_det_class(conj).rep(), qctx);
}

PartitionReport verify_partition(const std::vector<SL2Mat<Rational>>& sample, const Prime& p) {
  PartitionReport report;
  const std::size_t max_deltas = p.is_two() ? 7 : 3;
  for (const auto& a : sample) {
    const ConjugacyClass cls = classify(a, p);
    ++report.total;
    ++report.kind_counts[kind_label(cls.kind)];
    if (cls.kind == ClassKind::Nonsplit) {
      ++report.nonsplit_delta_counts[cls.delta_class->label()];
    }

    // Independent exclusivity check: evaluate the five defining predicates
    // directly and insist exactly the classified one holds.
    const bool is_i = (a == identity_sl2());
    const bool is_mi = (a == -identity_sl2());
    const Rational disc = discriminant(a);
    const bool unip = (disc == 0 && !is_i && !is_mi);
    const bool split = (disc != 0 && is_square(disc, p));
    const bool nonsplit = (disc != 0 && !is_square(disc, p));
    const int hits = int(is_i) + int(is_mi) + int(unip) + int(split) + int(nonsplit);
    const bool match = (cls.kind == ClassKind::CentralPlus && is_i) ||
                       (cls.kind == ClassKind::CentralMinus && is_mi) ||
                       ((cls.kind == ClassKind::UnipotentPlus ||
                         cls.kind == ClassKind::UnipotentMinus) &&
                        unip) ||
                       (cls.kind == ClassKind::Split && split) ||
                       (cls.kind == ClassKind::Nonsplit && nonsplit);
    if (hits != 1 || !match) report.exclusive_exhaustive = false;
  }
  if (report.nonsplit_delta_counts.size() > max_deltas) report.exclusive_exhaustive = false;
  return report;
}

}  // namespace padicsl2
