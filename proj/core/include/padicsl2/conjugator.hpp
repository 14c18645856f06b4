#pragma once

#include <variant>

#include "padicsl2/mat2.hpp"

namespace padicsl2 {

// An explicit change of basis P together with the canonical form it reaches:
// A = P * target * P^-1, equivalently conjugate(A, P) = target. P is
// invertible but not normalized to det 1 in general; det_class records the
// square class of det(P), certified at the precision the entries carry.
template <class S>
struct ConjugatorT {
  Mat2<S> P;
  SL2Mat<S> target;
  SquareClass det_class;
};

// Exact when the data is rational (det(P) = 1 checks and roundtrips are
// then exact); approximate when Hensel roots were needed.
using Conjugator = std::variant<ConjugatorT<Rational>, ConjugatorT<PadicApprox>>;

bool conjugator_is_exact(const Conjugator& c);
const SquareClass& conjugator_det_class(const Conjugator& c);

// conjugate(A, P) == target, exactly on the rational path and through the
// full certified window on the approximate one.
bool conjugator_roundtrip_ok(const SL2Mat<Rational>& a, const Conjugator& c,
                             const PadicCtx& ctx);

}  // namespace padicsl2
