#pragma once

#include <type_traits>
#include <vector>

#include "padicsl2/scalar.hpp"

namespace padicsl2 {

// The quadratic extension Q_p(sqrt(delta)). delta is canonicalized to the
// representative of its square class, so contexts built from different
// nonsquare scalars of the same class compare equal and interoperate.
class QuadCtx {
public:
  QuadCtx(const Rational& delta, const PadicCtx& pctx);

  const Rational& delta() const { return delta_; }
  const SquareClass& delta_class() const { return cls_; }
  const Prime& prime() const { return pctx_.prime(); }
  const PadicCtx& padic_ctx() const { return pctx_; }

  friend bool operator==(const QuadCtx& a, const QuadCtx& b) {
    return a.pctx_ == b.pctx_ && a.cls_ == b.cls_;
  }

private:
  PadicCtx pctx_;
  SquareClass cls_;
  Rational delta_;
};

// alpha + beta * sqrt(delta).
template <class S>
struct QuadElem {
  S alpha;
  S beta;
  QuadCtx qctx;
};

namespace quad_detail {

template <class S>
S lift(const Rational& x, const QuadCtx& q) {
  if constexpr (std::is_same_v<S, Rational>) {
    return x;
  } else {
    return to_padic(x, q.padic_ctx());
  }
}

template <class S>
void require_same(const QuadElem<S>& x, const QuadElem<S>& y) {
  if (!(x.qctx == y.qctx)) {
    throw ContextMismatch("quadratic extension elements from different contexts");
  }
}

}  // namespace quad_detail

template <class S>
QuadElem<S> quad_mul(const QuadElem<S>& x, const QuadElem<S>& y) {
  quad_detail::require_same(x, y);
  const S d = quad_detail::lift<S>(x.qctx.delta(), x.qctx);
  return QuadElem<S>{x.alpha * y.alpha + x.beta * y.beta * d,
                     x.alpha * y.beta + x.beta * y.alpha, x.qctx};
}

template <class S>
QuadElem<S> quad_conj(const QuadElem<S>& x) {
  return QuadElem<S>{x.alpha, -x.beta, x.qctx};
}

// N(x) = x * conj(x) = alpha^2 - beta^2 * delta, a scalar.
template <class S>
S quad_norm(const QuadElem<S>& x) {
  const S d = quad_detail::lift<S>(x.qctx.delta(), x.qctx);
  return x.alpha * x.alpha - x.beta * x.beta * d;
}

template <class S>
QuadElem<S> quad_inv(const QuadElem<S>& x) {
  const S n_inv = scalar_inv(quad_norm(x));
  return QuadElem<S>{x.alpha * n_inv, -(x.beta * n_inv), x.qctx};
}

// The square classes arising as norms from Q_p(sqrt(delta)). This is a
// subgroup of index 2 in the square class group; it is computed from exact
// rational witnesses a^2 - delta*b^2 and closed under class multiplication.
// PrecisionExhausted if the witness search cannot fill the subgroup.
std::vector<SquareClass> norm_classes(const QuadCtx& q);

// Whether the nonzero rational c is a norm from Q_p(sqrt(delta)).
// Constant on square classes. ZeroInput on 0.
bool is_norm(const Rational& c, const QuadCtx& q);

}  // namespace padicsl2
