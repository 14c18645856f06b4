#pragma once

#include <optional>

#include "padicsl2/scalar.hpp"

namespace padicsl2 {

// Plain 2x2 matrix over one scalar kind (all-exact or all-approximate).
template <class S>
struct Mat2 {
  S a11, a12, a21, a22;

  S trace() const { return a11 + a22; }
  S det() const { return a11 * a22 - a12 * a21; }

  Mat2 adjugate() const { return Mat2{a22, -a12, -a21, a11}; }

  // Adjugate over determinant; NotInvertible on (certified) zero det.
  Mat2 inverse() const {
    const S d_inv = scalar_inv(det());
    return Mat2{a22 * d_inv, -(a12 * d_inv), -(a21 * d_inv), a11 * d_inv};
  }

  Mat2 operator-() const { return Mat2{-a11, -a12, -a21, -a22}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
                x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return Mat2{x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return x + (-y); }

  // Scalar multiple.
  friend Mat2 operator*(const S& c, const Mat2& m) {
    return Mat2{c * m.a11, c * m.a12, c * m.a21, c * m.a22};
  }
};

inline bool operator==(const Mat2<Rational>& x, const Mat2<Rational>& y) {
  return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
}

Mat2<PadicApprox> to_padic(const Mat2<Rational>& m, const PadicCtx& ctx);

// Entrywise agreement through the certified windows.
bool agree(const Mat2<PadicApprox>& a, const Mat2<Rational>& b);
bool agree(const Mat2<PadicApprox>& a, const Mat2<PadicApprox>& b);

// The weakest window end among the entrywise differences a - b, i.e. the
// precision through which the two matrices are certified equal. nullopt if
// some entry provably differs.
std::optional<Valuation> agreement_window(const Mat2<PadicApprox>& a, const Mat2<Rational>& b);

// Determinant-1 wrapper. The invariant is validated on construction:
// exactly for rational entries, through the certified window for
// approximate ones.
template <class S>
class SL2Mat {
public:
  explicit SL2Mat(Mat2<S> m) : m_(std::move(m)) {
    if (!scalar_matches(m_.det(), Rational(1))) {
      throw DeterminantError("matrix determinant is not 1");
    }
  }

  const Mat2<S>& mat() const { return m_; }
  S trace() const { return m_.trace(); }

  // For det = 1 the adjugate is the exact inverse; no division happens.
  SL2Mat inverse() const { return SL2Mat(m_.adjugate()); }

  SL2Mat operator-() const { return SL2Mat(-m_); }

  friend SL2Mat operator*(const SL2Mat& x, const SL2Mat& y) { return SL2Mat(x.m_ * y.m_); }

private:
  Mat2<S> m_;
};

inline bool operator==(const SL2Mat<Rational>& x, const SL2Mat<Rational>& y) {
  return x.mat() == y.mat();
}

// Free-function spellings of the group operations.
template <class S>
SL2Mat<S> group_op(const SL2Mat<S>& a, const SL2Mat<S>& b) {
  return a * b;
}
template <class S>
SL2Mat<S> inverse(const SL2Mat<S>& a) {
  return a.inverse();
}
template <class S>
S trace(const SL2Mat<S>& a) {
  return a.trace();
}
template <class S>
S det(const Mat2<S>& m) {
  return m.det();
}

// x^g = g^-1 * x * g.
template <class S>
SL2Mat<S> conjugate(const SL2Mat<S>& a, const Mat2<S>& g) {
  return SL2Mat<S>(g.inverse() * a.mat() * g);
}

// [g, h] = g^-1 h^-1 g h.
template <class S>
SL2Mat<S> commutator(const SL2Mat<S>& g, const SL2Mat<S>& h) {
  return g.inverse() * h.inverse() * g * h;
}

SL2Mat<PadicApprox> to_padic(const SL2Mat<Rational>& m, const PadicCtx& ctx);

}  // namespace padicsl2
