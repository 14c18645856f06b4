#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padicsl2/conjugator.hpp"
#include "padicsl2/mat2.hpp"

namespace padicsl2 {

Mat2<Rational> identity_mat();
SL2Mat<Rational> identity_sl2();
// omega = [[0,1],[-1,0]]; conjugation by it inverts the diagonal torus.
SL2Mat<Rational> omega();

enum class SubgroupKind { Q1, Qdelta, U, Uplus, B };

// Names one of the distinguished standard subgroups. Qdelta carries the
// (nonidentity) square class whose representative defines it.
struct SubgroupTag {
  SubgroupKind kind;
  std::optional<SquareClass> delta;

  static SubgroupTag q1() { return {SubgroupKind::Q1, std::nullopt}; }
  static SubgroupTag qdelta(const SquareClass& cls);
  static SubgroupTag u() { return {SubgroupKind::U, std::nullopt}; }
  static SubgroupTag uplus() { return {SubgroupKind::Uplus, std::nullopt}; }
  static SubgroupTag b() { return {SubgroupKind::B, std::nullopt}; }

  // "Q1", "Q[u]", "U", "U+", "B".
  std::string label() const;
};

// Structural membership in the standard copy named by tag:
//   Q1     <=> diagonal
//   Qdelta <=> [[a,b],[b*delta,a]] with a^2 - b^2*delta = 1
//   Uplus  <=> upper unitriangular
//   U      <=> +-Uplus
//   B      <=> upper triangular
bool subgroup_membership(const SL2Mat<Rational>& g, const SubgroupTag& tag);

// Basis of {g in M2(Q) : gA = Ag}, solved exactly. dim is 4 iff A = +-I,
// else 2 with span {I, A}. Basis elements are scaled to primitive integer
// entries with positive leading coefficient.
struct CommutantBasis {
  unsigned dim;
  std::vector<Mat2<Rational>> basis;
};
CommutantBasis commutant_basis(const SL2Mat<Rational>& a);

// What the SL2-centralizer of A is: everything (central A), or a conjugate
// of Q1 / Q_delta / U. When A does not already sit in the standard copy, a
// conjugating witness moving A into it is attached.
struct CentralizerInfo {
  bool central;
  std::optional<SubgroupTag> tag;       // set iff !central
  bool standard_copy;                   // A lies in the standard copy itself
  std::optional<Conjugator> witness;    // set iff !central && !standard_copy
};
CentralizerInfo centralizer_tag(const SL2Mat<Rational>& a, const Prime& p,
                                unsigned precision = kDefaultPrecision);

// Structural normalizer test for the standard copies; see the membership
// patterns above. For Q1 the normalizer adds the antidiagonal coset; for
// U/Uplus it is the upper triangular group; for Qdelta the test is
// membership in Q_delta itself. B is out of scope (UnsupportedTag).
bool normalizer_checks(const SL2Mat<Rational>& g, const SubgroupTag& tag);

// [w, [w, ... [w, t]]] with `depth` commutators.
SL2Mat<Rational> iterated_commutator(const SL2Mat<Rational>& w, const SL2Mat<Rational>& t,
                                     unsigned depth);

}  // namespace padicsl2
