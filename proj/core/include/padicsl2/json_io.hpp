#pragma once

#include <string>
#include <vector>

#include "padicsl2/cartan.hpp"
#include "padicsl2/conjugator.hpp"
#include "padicsl2/generosity.hpp"
#include "padicsl2/mat2.hpp"

namespace padicsl2 {

// Matrix input is a JSON 2x2 array of rational strings,
// e.g. [["0","1"],["-1","0"]]. ParseError on anything else; the SL2 parse
// additionally rejects det != 1 with DeterminantError.
Mat2<Rational> parse_mat2(const std::string& text);
SL2Mat<Rational> parse_sl2(const std::string& text);
// JSON list of matrices; empty lists are rejected (ZeroInput).
std::vector<SL2Mat<Rational>> parse_family(const std::string& text);

// Compact single-line JSON, keys sorted, all numbers carried as exact
// rational strings. Same input, same bytes.
std::string to_json_string(const Mat2<Rational>& m);
std::string to_json_string(const SL2Mat<Rational>& m);
std::string to_json_string(const PadicApprox& x);
std::string to_json_string(const ConjugacyClass& c);
std::string to_json_string(const Conjugator& c);
std::string to_json_string(const CoverWitness& w);
std::string to_json_string(const EscapeWitness& w);
std::string to_json_string(const GenericityReport& r);

}  // namespace padicsl2
