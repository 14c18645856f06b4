#pragma once

// Shared nlohmann builders for json_io.cpp and verify.cpp. Not installed;
// the public surface (json_io.hpp) trades only in std::string.

#include <json.hpp>

#include "padicsl2/cartan.hpp"
#include "padicsl2/conjugator.hpp"
#include "padicsl2/generosity.hpp"

namespace padicsl2::detail {

using Json = nlohmann::json;

Json rational_json(const Rational& x);
Json integer_json(const Integer& x);  // number when it fits in long, else string
Json mat2_json(const Mat2<Rational>& m);
Json mat2_json(const Mat2<PadicApprox>& m);
Json approx_json(const PadicApprox& x);
Json class_json(const ConjugacyClass& c);
Json conjugator_json(const Conjugator& c);
Json cover_witness_json(const CoverWitness& w);
Json escape_witness_json(const EscapeWitness& w);
Json genericity_json(const GenericityReport& r);

Mat2<Rational> mat2_from_json(const Json& j);

}  // namespace padicsl2::detail
