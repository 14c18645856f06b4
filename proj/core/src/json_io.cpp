#include "padicsl2/json_io.hpp"

#include "detail/json_build.hpp"

namespace padicsl2 {

namespace detail {

Json rational_json(const Rational& x) { return to_string(x); }

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return to_string(x);
}

Json mat2_json(const Mat2<Rational>& m) {
  return Json::array({Json::array({rational_json(m.a11), rational_json(m.a12)}),
                      Json::array({rational_json(m.a21), rational_json(m.a22)})});
}

Json approx_json(const PadicApprox& x) {
  Json j;
  j["p"] = integer_json(x.ctx().prime().value());
  j["N"] = x.digits();
  if (x.known_nonzero()) {
    j["valuation"] = x.valuation();
    j["unit"] = to_string(x.unit());
  } else {
    j["valuation"] = x.is_exact_zero() ? "+inf" : ">=" + std::to_string(x.valuation_lower_bound().value());
    j["unit"] = "0";
  }
  return j;
}

Json mat2_json(const Mat2<PadicApprox>& m) {
  return Json::array({Json::array({approx_json(m.a11), approx_json(m.a12)}),
                      Json::array({approx_json(m.a21), approx_json(m.a22)})});
}

Json class_json(const ConjugacyClass& c) {
  Json j;
  j["kind"] = kind_label(c.kind);
  if (c.delta_class) j["deltaClass"] = c.delta_class->label();
  if (c.norm_class_is_trivial) j["standardCopy"] = *c.norm_class_is_trivial;
  return j;
}

Json conjugator_json(const Conjugator& c) {
  Json j;
  j["detClass"] = conjugator_det_class(c).label();
  if (const auto* exact = std::get_if<ConjugatorT<Rational>>(&c)) {
    j["entries"] = "rational";
    j["P"] = mat2_json(exact->P);
    j["target"] = mat2_json(exact->target.mat());
  } else {
    const auto& approx = std::get<ConjugatorT<PadicApprox>>(c);
    j["entries"] = "padic";
    j["P"] = mat2_json(approx.P);
    j["target"] = mat2_json(approx.target.mat());
  }
  return j;
}

Json cover_witness_json(const CoverWitness& w) {
  Json j;
  j["index"] = w.index;
  j["translate"] = mat2_json(w.translate.mat());
  j["checkedTrace"] = rational_json(w.checked_trace);
  return j;
}

Json escape_witness_json(const EscapeWitness& w) {
  Json j;
  j["x"] = rational_json(w.x);
  j["y"] = rational_json(w.y);
  j["witnessMatrix"] = mat2_json(w.witness_matrix.mat());
  Json traces = Json::array();
  for (const auto& t : w.per_translate_traces) traces.push_back(rational_json(t));
  j["perTranslateTraces"] = std::move(traces);
  return j;
}

Json genericity_json(const GenericityReport& r) {
  Json j;
  j["p"] = integer_json(r.p);
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["fractionW"] = rational_json(r.fraction_w());
  j["classCounts"] = Json(r.class_counts);
  j["coverHistogram"] = Json(r.cover_histogram);
  return j;
}

Mat2<Rational> mat2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("matrix must be a JSON array of 2 rows");
  }
  Rational e[2][2];
  for (int r = 0; r < 2; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != 2) {
      throw ParseError("matrix row must hold exactly 2 entries");
    }
    for (int c = 0; c < 2; ++c) {
      if (!row[c].is_string()) {
        throw ParseError("matrix entries must be rational strings like \"-1/2\"");
      }
      e[r][c] = parse_rational(row[c].get<std::string>());
    }
  }
  return Mat2<Rational>{e[0][0], e[0][1], e[1][0], e[1][1]};
}

}  // namespace detail

namespace {

detail::Json parse_or_throw(const std::string& text) {
  detail::Json j = detail::Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("malformed JSON: " + text);
  return j;
}

}  // namespace

Mat2<Rational> parse_mat2(const std::string& text) {
  return detail::mat2_from_json(parse_or_throw(text));
}

SL2Mat<Rational> parse_sl2(const std::string& text) {
  return SL2Mat<Rational>(parse_mat2(text));
}

std::vector<SL2Mat<Rational>> parse_family(const std::string& text) {
  const detail::Json j = parse_or_throw(text);
  if (!j.is_array()) throw ParseError("family must be a JSON list of matrices");
  if (j.empty()) throw ZeroInput("family is empty");
  std::vector<SL2Mat<Rational>> family;
  family.reserve(j.size());
  for (const auto& item : j) {
    family.emplace_back(detail::mat2_from_json(item));
  }
  return family;
}

std::string to_json_string(const Mat2<Rational>& m) { return detail::mat2_json(m).dump(); }

std::string to_json_string(const SL2Mat<Rational>& m) {
  return detail::mat2_json(m.mat()).dump();
}

std::string to_json_string(const PadicApprox& x) { return detail::approx_json(x).dump(); }

std::string to_json_string(const ConjugacyClass& c) { return detail::class_json(c).dump(); }

std::string to_json_string(const Conjugator& c) { return detail::conjugator_json(c).dump(); }

std::string to_json_string(const CoverWitness& w) {
  return detail::cover_witness_json(w).dump();
}

std::string to_json_string(const EscapeWitness& w) {
  return detail::escape_witness_json(w).dump();
}

std::string to_json_string(const GenericityReport& r) {
  return detail::genericity_json(r).dump();
}

}  // namespace padicsl2
