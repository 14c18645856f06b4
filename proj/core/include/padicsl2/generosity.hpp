#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "padicsl2/cartan.hpp"
#include "padicsl2/sampler.hpp"

namespace padicsl2 {

// W = {A : vp(tr A) < 0}. Its complement W' includes trace 0 (vp = +inf).
bool in_w(const SL2Mat<Rational>& a, const Prime& p);

// The four translates covering SL2(Q_p) by W:
//   A1 = I, A2 = [[0,1],[-1,0]], A3 = [[1/p,0],[0,p]], A4 = [[0,-1/p],[p,0]].
std::array<SL2Mat<Rational>, 4> covering_family(const Prime& p);

struct CoverWitness {
  unsigned index;               // 1-based; the smallest i that works
  SL2Mat<Rational> translate;   // A_index
  Rational checked_trace;       // trace(A_index^-1 * M), vp < 0
};

// Smallest i with vp(trace(A_i^-1 M)) < 0. Always exists; CoverageViolation
// (a falsification event, never expected to fire) otherwise.
CoverWitness cover_witness(const SL2Mat<Rational>& m, const Prime& p);

struct EscapeWitness {
  Rational x;
  Rational y;                       // 0 for the diagonal-witness construction
  SL2Mat<Rational> witness_matrix;  // [[x,y],[0,1/x]]
  std::vector<Rational> per_translate_traces;
};

// Diagonal-witness escape: x = p^m with m = 1 + the largest finite |vp|
// among the translates' diagonal entries, y = 0. Requires every translate
// to have a nonzero diagonal pair (AntidiagonalTranslate when a = d = 0).
// A translate with a = 0 != d defeats the bound: the witness is then
// rejected by its own verification (WitnessVerificationFailed); use
// escape_witness_general for those families.
EscapeWitness escape_witness_paper(const std::vector<SL2Mat<Rational>>& family, const Prime& p);

// Total escape construction. x = p^m as above over the translates with
// c = 0 (for those a*d = 1, so the diagonal bound is sound); then y = p^t
// with t small enough that vp(c*y) strictly undercuts every other finite
// term of trace(A^-1 * [[x,y],[0,1/x]]) = d*x - c*y + a/x for each c != 0
// translate. Never fails on a nonempty family.
EscapeWitness escape_witness_general(const std::vector<SL2Mat<Rational>>& family,
                                     const Prime& p);

// is_square(discriminant) for elements of W. Always true (W sits inside the
// split-torus orbit); a false return falsifies that inclusion and is
// surfaced as an event by callers. NotInW when vp(tr) >= 0.
bool w_orbit_check(const SL2Mat<Rational>& a, const Prime& p);

struct GenericityReport {
  Integer p;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t in_w_count = 0;
  // classify() label -> count; Nonsplit broken out per delta class as
  // "Nonsplit[<label>]".
  std::map<std::string, std::size_t> class_counts;
  std::array<std::size_t, 4> cover_histogram{0, 0, 0, 0};

  Rational fraction_w() const {
    return make_rational(Integer(static_cast<long>(in_w_count)),
                         Integer(static_cast<long>(n)));
  }
};

// Sample n matrices and tabulate W membership, conjugacy classes and cover
// witness indices. Deterministic for a given config. ZeroInput when n = 0.
GenericityReport genericity_stats(const SamplerConfig& config, std::size_t n, const Prime& p);

}  // namespace padicsl2
