#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "padicsl2/cartan.hpp"
#include "padicsl2/generosity.hpp"
#include "padicsl2/json_io.hpp"
#include "padicsl2/padic_approx.hpp"
#include "padicsl2/sampler.hpp"
#include "padicsl2/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
// Reserved for mathematical falsification events (a cover violation or a
// verify suite with counterexamples), as opposed to bad usage or bad input.
constexpr int kFalsification = 2;

struct Options {
  std::string prime;
  unsigned precision = padicsl2::kDefaultPrecision;
  std::uint64_t seed = 0;
  std::size_t n = 1000;
  std::string matrix;
  std::string family;
  std::string value;
  std::string suite;
  std::string delta;
  std::string out;
  std::string log;
  bool refine = false;
  bool paper = false;
};

padicsl2::Prime parse_prime(const std::string& text) {
  try {
    return padicsl2::Prime(padicsl2::Integer(text));
  } catch (const std::invalid_argument&) {
    throw padicsl2::ParseError("--prime is not an integer: " + text);
  }
}

void write_line(const std::string& line, const std::string& path) {
  if (path.empty()) {
    std::cout << line << '\n';
    return;
  }
  std::ofstream f(path, std::ios::trunc);
  if (!f) throw padicsl2::Error("cannot open output file: " + path);
  f << line << '\n';
}

void append_log(const std::vector<std::string>& lines, const std::string& path) {
  if (lines.empty()) return;
  if (path.empty()) {
    for (const auto& l : lines) std::cerr << l << '\n';
    return;
  }
  std::ofstream f(path, std::ios::app);
  if (!f) throw padicsl2::Error("cannot open log file: " + path);
  for (const auto& l : lines) f << l << '\n';
}

int dispatch(const std::string& verb, const Options& o) {
  using namespace padicsl2;
  const Prime p = parse_prime(o.prime);

  if (verb == "classify") {
    const SL2Mat<Rational> a = parse_sl2(o.matrix);
    ConjugacyClass cls = classify(a, p);
    if (o.refine && cls.kind == ClassKind::Nonsplit) {
      cls.norm_class_is_trivial = orbit_refinement(a, PadicCtx(p, o.precision));
    }
    write_line(to_json_string(cls), o.out);
    return kOk;
  }
  if (verb == "square-class") {
    const SquareClass cls = square_class(parse_rational(o.value), p);
    nlohmann::json j;
    j["label"] = cls.label();
    j["rep"] = to_string(cls.rep());
    write_line(j.dump(), o.out);
    return kOk;
  }
  if (verb == "diagonalize") {
    write_line(to_json_string(diagonalize(parse_sl2(o.matrix), PadicCtx(p, o.precision))),
               o.out);
    return kOk;
  }
  if (verb == "qdelta-form") {
    write_line(to_json_string(qdelta_form(parse_sl2(o.matrix), PadicCtx(p, o.precision))),
               o.out);
    return kOk;
  }
  if (verb == "unipotent-form") {
    write_line(to_json_string(unipotent_form(parse_sl2(o.matrix), p)), o.out);
    return kOk;
  }
  if (verb == "cover-witness") {
    const SL2Mat<Rational> m = parse_sl2(o.matrix);
    try {
      write_line(to_json_string(cover_witness(m, p)), o.out);
    } catch (const CoverageViolation& e) {
      nlohmann::json event;
      event["issue"] = e.what();
      event["matrix"] = nlohmann::json::parse(to_json_string(m));
      append_log({event.dump()}, o.log);
      throw;
    }
    return kOk;
  }
  if (verb == "escape-witness") {
    const auto family = parse_family(o.family);
    const EscapeWitness w =
        o.paper ? escape_witness_paper(family, p) : escape_witness_general(family, p);
    write_line(to_json_string(w), o.out);
    return kOk;
  }
  if (verb == "sample") {
    SamplerConfig config;
    config.seed = o.seed;
    write_line(to_json_string(genericity_stats(config, o.n, p)), o.out);
    return kOk;
  }
  if (verb == "verify") {
    VerifyOptions vo{p};
    vo.n = o.n;
    vo.seed = o.seed;
    vo.precision = o.precision;
    if (!o.delta.empty()) vo.delta_filter = SquareClass::from_label(o.delta, p);
    const VerifyOutcome outcome = run_suite(parse_suite(o.suite), vo);
    append_log(outcome.counterexamples, o.log);
    write_line(outcome.report_json, o.out);
    return outcome.counterexample_count == 0 ? kOk : kFalsification;
  }
  throw padicsl2::Error("unhandled verb: " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact conjugacy classification, Cartan-subgroup witnesses and genericity "
               "checks for SL2 over the p-adic rationals"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--prime", o.prime, "the prime p")->required();
    sub->add_option("--out", o.out, "write the JSON result here instead of stdout");
  };
  const auto add_matrix = [&](CLI::App* sub) {
    sub->add_option("--matrix", o.matrix,
                    "2x2 matrix as JSON rows of rational strings, det 1")
        ->required();
  };
  const auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", o.precision,
                    "certified base-p digits for approximate arithmetic (>= 4)");
  };

  auto* classify_cmd = app.add_subcommand("classify", "trace-discriminant conjugacy class");
  add_common(classify_cmd);
  add_matrix(classify_cmd);
  add_precision(classify_cmd);
  classify_cmd->add_flag("--refine", o.refine,
                         "for Nonsplit: also decide conjugacy into the standard copy");

  auto* square_cmd = app.add_subcommand("square-class", "square class of a nonzero rational");
  add_common(square_cmd);
  square_cmd->add_option("--value", o.value, "rational, e.g. -3/4")->required();

  for (const char* name : {"diagonalize", "qdelta-form"}) {
    auto* sub = app.add_subcommand(
        name, std::string(name) == "diagonalize"
                  ? "split element to diag(lambda, 1/lambda) with explicit basis"
                  : "nonsplit element into the standard norm-1 torus");
    add_common(sub);
    add_matrix(sub);
    add_precision(sub);
  }

  auto* unip_cmd = app.add_subcommand("unipotent-form",
                                      "unipotent element into the unitriangular group");
  add_common(unip_cmd);
  add_matrix(unip_cmd);

  auto* cover_cmd = app.add_subcommand(
      "cover-witness", "smallest translate index moving the matrix into W");
  add_common(cover_cmd);
  add_matrix(cover_cmd);
  cover_cmd->add_option("--log", o.log, "falsification log file (default stderr)");

  auto* escape_cmd = app.add_subcommand(
      "escape-witness", "matrix outside every W'-translate of the given family");
  add_common(escape_cmd);
  escape_cmd->add_option("--family", o.family, "JSON list of det-1 matrices")->required();
  escape_cmd->add_flag("--paper", o.paper,
                       "use the diagonal-only construction (rejects antidiagonal translates)");

  auto* sample_cmd = app.add_subcommand("sample", "class/W statistics over random matrices");
  add_common(sample_cmd);
  sample_cmd->add_option("--n", o.n, "sample size");
  sample_cmd->add_option("--seed", o.seed, "RNG seed");

  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite at scale");
  add_common(verify_cmd);
  verify_cmd
      ->add_option("--suite", o.suite,
                   "partition | cover | escape | w-orbit | centralizer | omega | all")
      ->required();
  verify_cmd->add_option("--n", o.n, "iterations per suite");
  verify_cmd->add_option("--seed", o.seed, "RNG seed");
  add_precision(verify_cmd);
  verify_cmd->add_option("--delta", o.delta,
                         "restrict the centralizer suite to one square class label");
  verify_cmd->add_option("--log", o.log, "counterexample log file (default stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    nlohmann::json err;
    err["error"] = e.what();
    std::cout << err.dump() << '\n';
    return kDomainError;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    return dispatch(verb, o);
  } catch (const padicsl2::CoverageViolation& e) {
    nlohmann::json err;
    err["error"] = e.what();
    err["falsification"] = true;
    std::cout << err.dump() << '\n';
    return kFalsification;
  } catch (const std::exception& e) {
    nlohmann::json err;
    err["error"] = e.what();
    std::cout << err.dump() << '\n';
    return kDomainError;
  }
}
