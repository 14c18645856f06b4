#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padicsl2/conjugator.hpp"
#include "padicsl2/mat2.hpp"

namespace padicsl2 {

enum class ClassKind {
  CentralPlus,
  CentralMinus,
  UnipotentPlus,
  UnipotentMinus,
  Split,
  Nonsplit,
};

std::string kind_label(ClassKind kind);

// The trace-discriminant conjugacy class of an SL2 element.
struct ConjugacyClass {
  ClassKind kind;
  // Square class of the discriminant; present iff Nonsplit (never the
  // identity class there).
  std::optional<SquareClass> delta_class;
  // Result of orbit_refinement; present iff Nonsplit and refinement was
  // requested. true = SL2-conjugate into the standard Q_delta copy.
  std::optional<bool> norm_class_is_trivial;
};

// tr(A)^2 - 4.
Rational discriminant(const SL2Mat<Rational>& a);

// +-I -> Central+-; disc 0 -> Unipotent+- by trace sign; disc a nonzero
// square -> Split; else Nonsplit with delta_class = square_class(disc).
ConjugacyClass classify(const SL2Mat<Rational>& a, const Prime& p);

// Explicit change of basis A = P * D * P^-1 with D = diag(lambda, 1/lambda),
// lambda = (tr + sqrt(disc))/2 taking the canonical Hensel root. det(P) = 1
// (exact on the rational fast path, certified through the window otherwise).
// NotSplit unless classify(A) = Split.
Conjugator diagonalize(const SL2Mat<Rational>& a, const PadicCtx& ctx);

// Explicit change of basis A = P * B * P^-1 with B = [[alpha, beta],
// [beta*delta, alpha]] in the standard Q_delta, delta the canonical
// representative of square_class(disc), alpha = tr/2,
// beta = sqrt(disc/delta)/2. P is invertible but not unimodular; its
// determinant's square class is recorded. NotNonsplit unless
// classify(A) = Nonsplit.
Conjugator qdelta_form(const SL2Mat<Rational>& a, const PadicCtx& ctx);

// Explicit unimodular P with P^-1 A P in U \ {+-I}, exact rational
// arithmetic. NotUnipotent unless classify(A) is unipotent. The prime only
// labels the (trivial) determinant class.
Conjugator unipotent_form(const SL2Mat<Rational>& a, const Prime& p);

// Whether det(P) from qdelta_form is a norm of Q_p(sqrt(delta)) — true
// means A is SL2-conjugate (not merely GL2-conjugate) into the standard
// Q_delta. Well-defined: the conjugator is unique up to centralizer
// elements, whose determinants are norms.
bool orbit_refinement(const SL2Mat<Rational>& a, const PadicCtx& ctx);

// Batch classification consistency report over a sample.
struct PartitionReport {
  std::size_t total = 0;
  std::map<std::string, std::size_t> kind_counts;           // kind label -> count
  std::map<std::string, std::size_t> nonsplit_delta_counts; // delta label -> count
  bool exclusive_exhaustive = true;
};
PartitionReport verify_partition(const std::vector<SL2Mat<Rational>>& sample, const Prime& p);

}  // namespace padicsl2
