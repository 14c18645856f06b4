#include "padicsl2/json_io.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <set>
#include <string>

#include "padicsl2/sampler.hpp"
#include "padicsl2/sl2core.hpp"
#include "padicsl2/verify.hpp"

using namespace padicsl2;

namespace {

Mat2<Rational> m2(long a, long b, long c, long d) {
  return Mat2<Rational>{Rational(a), Rational(b), Rational(c), Rational(d)};
}

SL2Mat<Rational> sl2(long a, long b, long c, long d) { return SL2Mat<Rational>(m2(a, b, c, d)); }

std::set<std::string> keys(const nlohmann::json& j) {
  std::set<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.insert(it.key());
  return out;
}

TEST(ParseMat2, AcceptsRationalStringGrids) {
  const auto m = parse_mat2(R"([["1","-1/2"],["3","4"]])");
  EXPECT_EQ(m.a11, Rational(1));
  EXPECT_EQ(m.a12, make_rational(-1, 2));
  EXPECT_EQ(m.a21, Rational(3));
  EXPECT_EQ(m.a22, Rational(4));
}

TEST(ParseMat2, RejectsEverythingElse) {
  EXPECT_THROW(parse_mat2("not json"), ParseError);
  EXPECT_THROW(parse_mat2("[1,2]"), ParseError);
  EXPECT_THROW(parse_mat2(R"([["1","2"],["3"]])"), ParseError);
  EXPECT_THROW(parse_mat2(R"([["1","2"],["3",4]])"), ParseError);
  EXPECT_THROW(parse_mat2(R"([["1","2"],["3","x"]])"), ParseError);
  EXPECT_THROW(parse_mat2(R"([["1","2"],["3","1/0"]])"), ParseError);
  EXPECT_THROW(parse_mat2(R"({"a":"1"})"), ParseError);
}

TEST(ParseSl2, ValidatesTheDeterminant) {
  EXPECT_EQ(parse_sl2(R"([["0","1"],["-1","0"]])"), omega());
  EXPECT_THROW(parse_sl2(R"([["1","1"],["1","1"]])"), DeterminantError);
  EXPECT_THROW(parse_sl2(R"([["2","0"],["0","1"]])"), DeterminantError);
}

TEST(ParseFamily, ListsOfMatrices) {
  const auto fam = parse_family(R"([[["0","1"],["-1","0"]],[["1","0"],["0","1"]]])");
  ASSERT_EQ(fam.size(), 2u);
  EXPECT_EQ(fam[0], omega());
  EXPECT_EQ(fam[1], identity_sl2());

  EXPECT_THROW(parse_family("[]"), ZeroInput);
  EXPECT_THROW(parse_family(R"({"family":[]})"), ParseError);
  EXPECT_THROW(parse_family(R"([[["1","1"],["1","1"]]])"), DeterminantError);
}

TEST(ToJson, MatricesAreCompactSortedAndExact) {
  EXPECT_EQ(to_json_string(m2(1, 2, 3, 4)), R"([["1","2"],["3","4"]])");
  EXPECT_EQ(to_json_string(omega()), R"([["0","1"],["-1","0"]])");
}

TEST(ToJson, SerializedMatricesParseBack) {
  SamplerConfig cfg;
  cfg.seed = 4;
  Sl2Sampler sampler(cfg);
  for (int i = 0; i < 20; ++i) {
    const auto a = sampler.next();
    EXPECT_EQ(parse_sl2(to_json_string(a)), a);
  }
}

TEST(ToJson, ApproximateValuesCarryWindowAndUnit) {
  const PadicCtx ctx(Prime(5), 8);
  EXPECT_EQ(to_json_string(to_padic(make_rational(3, 5), ctx)),
            R"({"N":8,"p":5,"unit":"3","valuation":-1})");
  EXPECT_EQ(to_json_string(PadicApprox::zero(ctx)),
            R"({"N":0,"p":5,"unit":"0","valuation":"+inf"})");
  EXPECT_EQ(to_json_string(PadicApprox::big_oh(ctx, 3)),
            R"({"N":0,"p":5,"unit":"0","valuation":">=3"})");
}

TEST(ToJson, ConjugacyClassShape) {
  EXPECT_EQ(to_json_string(classify(omega(), Prime(5))), R"({"kind":"Split"})");
  EXPECT_EQ(to_json_string(classify(omega(), Prime(7))),
            R"({"deltaClass":"u","kind":"Nonsplit"})");

  ConjugacyClass refined = classify(omega(), Prime(7));
  refined.norm_class_is_trivial = true;
  EXPECT_EQ(to_json_string(refined),
            R"({"deltaClass":"u","kind":"Nonsplit","standardCopy":true})");
}

TEST(ToJson, WitnessShapes) {
  const Prime p5(5);
  EXPECT_EQ(to_json_string(cover_witness(identity_sl2(), p5)),
            R"({"checkedTrace":"26/5","index":3,"translate":[["1/5","0"],["0","5"]]})");
  EXPECT_EQ(to_json_string(escape_witness_general({omega()}, p5)),
            R"({"perTranslateTraces":["1/5"],"witnessMatrix":[["5","1/5"],["0","1/5"]],"x":"5","y":"1/5"})");
}

TEST(ToJson, ConjugatorShape) {
  const auto c = qdelta_form(sl2(5, 2, 2, 1), PadicCtx(Prime(5), 16));
  EXPECT_EQ(to_json_string(c),
            R"({"P":[["2","0"],["-2","-2"]],"detClass":"1","entries":"rational","target":[["3","-2"],["-4","3"]]})");

  const auto h = qdelta_form(sl2(0, 1, -1, 1), PadicCtx(Prime(5), 8));
  const auto j = nlohmann::json::parse(to_json_string(h));
  EXPECT_EQ(j["entries"], "padic");
  EXPECT_EQ(j["detClass"], "u");
  EXPECT_EQ(keys(j), (std::set<std::string>{"P", "detClass", "entries", "target"}));
}

TEST(ToJson, GenericityReportKeysAndDeterminism) {
  SamplerConfig cfg;
  cfg.seed = 9;
  const auto report = genericity_stats(cfg, 50, Prime(5));
  const std::string text = to_json_string(report);
  EXPECT_EQ(text, to_json_string(genericity_stats(cfg, 50, Prime(5))));

  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(keys(j), (std::set<std::string>{"classCounts", "coverHistogram", "fractionW", "n",
                                            "p", "seed"}));
  EXPECT_EQ(j["p"], 5);
  EXPECT_EQ(j["n"], 50);
  EXPECT_EQ(j["coverHistogram"].size(), 4u);
}

TEST(VerifySuites, NamesRoundTrip) {
  for (const auto suite : {Suite::Partition, Suite::Cover, Suite::Escape, Suite::WOrbit,
                           Suite::Centralizer, Suite::Omega, Suite::All}) {
    EXPECT_EQ(parse_suite(suite_name(suite)), suite);
  }
  EXPECT_EQ(suite_name(Suite::WOrbit), "w-orbit");
  EXPECT_THROW(parse_suite("bogus"), UnknownSuite);
  EXPECT_THROW(parse_suite("Partition"), UnknownSuite);  // case sensitive
}

TEST(VerifySuites, CleanRunsAreByteDeterministic) {
  VerifyOptions opts{Prime(5)};
  opts.n = 40;
  opts.seed = 6;

  const auto once = run_suite(Suite::All, opts);
  const auto twice = run_suite(Suite::All, opts);
  EXPECT_EQ(once.report_json, twice.report_json);
  EXPECT_EQ(once.counterexample_count, 0u);
  EXPECT_TRUE(once.counterexamples.empty());

  const auto j = nlohmann::json::parse(once.report_json);
  EXPECT_EQ(keys(j), (std::set<std::string>{"counterexampleCount", "n", "p", "precision",
                                            "results", "seed", "suite"}));
  EXPECT_EQ(j["suite"], "all");
  EXPECT_EQ(j["p"], 5);
  EXPECT_EQ(j["counterexampleCount"], 0);
  EXPECT_EQ(keys(j["results"]),
            (std::set<std::string>{"centralizer", "cover", "escape", "omega", "partition",
                                   "w-orbit"}));
}

TEST(VerifySuites, SingleSuitePayloads) {
  VerifyOptions opts{Prime(2)};
  opts.n = 30;
  opts.seed = 2;

  const auto partition = run_suite(Suite::Partition, opts);
  const auto pj = nlohmann::json::parse(partition.report_json);
  EXPECT_EQ(pj["suite"], "partition");
  EXPECT_TRUE(pj["results"]["partition"].contains("classCounts"));
  EXPECT_EQ(partition.counterexample_count, 0u);

  const auto omega_run = run_suite(Suite::Omega, opts);
  const auto oj = nlohmann::json::parse(omega_run.report_json);
  EXPECT_TRUE(oj["results"]["omega"].contains("toriChecked"));
  EXPECT_EQ(omega_run.counterexample_count, 0u);
}

TEST(VerifySuites, DeltaFilterRestrictsTheCentralizerRun) {
  VerifyOptions opts{Prime(5)};
  opts.n = 20;
  opts.seed = 3;
  opts.delta_filter = SquareClass::from_label("p", Prime(5));

  const auto run = run_suite(Suite::Centralizer, opts);
  const auto j = nlohmann::json::parse(run.report_json);
  EXPECT_EQ(run.counterexample_count, 0u);
  EXPECT_EQ(j["results"]["centralizer"]["deltaClasses"], 1);
}

}  // namespace
