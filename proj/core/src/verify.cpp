#include "padicsl2/verify.hpp"

#include <utility>

#include "detail/json_build.hpp"
#include "padicsl2/cartan.hpp"
#include "padicsl2/generosity.hpp"
#include "padicsl2/sampler.hpp"
#include "padicsl2/sl2core.hpp"

namespace padicsl2 {

Suite parse_suite(const std::string& name) {
  if (name == "partition") return Suite::Partition;
  if (name == "cover") return Suite::Cover;
  if (name == "escape") return Suite::Escape;
  if (name == "w-orbit") return Suite::WOrbit;
  if (name == "centralizer") return Suite::Centralizer;
  if (name == "omega") return Suite::Omega;
  if (name == "all") return Suite::All;
  throw UnknownSuite("unknown verify suite: " + name);
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::Partition: return "partition";
    case Suite::Cover: return "cover";
    case Suite::Escape: return "escape";
    case Suite::WOrbit: return "w-orbit";
    case Suite::Centralizer: return "centralizer";
    case Suite::Omega: return "omega";
    case Suite::All: return "all";
  }
  throw UnknownSuite("corrupt suite value");
}

namespace {

using detail::Json;

struct SuiteRun {
  Json payload = Json::object();
  std::vector<std::string> lines;

  // Record one falsification event; `where` carries the offending input.
  void flag(const char* suite, const std::string& issue, Json where) {
    where["suite"] = suite;
    where["issue"] = issue;
    lines.push_back(where.dump());
  }
};

Json matrix_detail(const SL2Mat<Rational>& a) {
  Json j;
  j["matrix"] = detail::mat2_json(a.mat());
  return j;
}

Rational nonzero_rational(Rng& rng, long height) {
  Rational r = 0;
  while (r == 0) {
    r = make_rational(Integer(rng.int_in(-height, height)),
                      Integer(rng.int_in(1, height)));
  }
  return r;
}

// Each sampled matrix must land in exactly one class, recomputed here from
// first principles rather than trusting classify's own branching.
SuiteRun run_partition(const VerifyOptions& opts) {
  SuiteRun run;
  Sl2Sampler sampler(SamplerConfig{opts.seed});
  std::map<std::string, std::size_t> kind_counts;
  std::map<std::string, std::size_t> delta_counts;

  for (std::size_t i = 0; i < opts.n; ++i) {
    const SL2Mat<Rational> a = sampler.next();
    const ConjugacyClass cls = classify(a, opts.p);
    const Rational disc = discriminant(a);

    const bool plus = a == identity_sl2();
    const bool minus = a == -identity_sl2();
    const bool unip_plus = !plus && disc == 0 && a.trace() == 2;
    const bool unip_minus = !minus && disc == 0 && a.trace() == -2;
    const bool split = disc != 0 && is_square(disc, opts.p);
    const bool nonsplit = disc != 0 && !is_square(disc, opts.p);

    const std::pair<bool, ClassKind> table[] = {
        {plus, ClassKind::CentralPlus},     {minus, ClassKind::CentralMinus},
        {unip_plus, ClassKind::UnipotentPlus}, {unip_minus, ClassKind::UnipotentMinus},
        {split, ClassKind::Split},          {nonsplit, ClassKind::Nonsplit}};
    unsigned hits = 0;
    bool matched = false;
    for (const auto& [hit, kind] : table) {
      hits += hit ? 1 : 0;
      if (hit && kind == cls.kind) matched = true;
    }
    if (hits != 1 || !matched) {
      run.flag("partition", "class predicates not exclusive-exhaustive, or classify disagrees",
               matrix_detail(a));
    }
    if (cls.kind == ClassKind::Nonsplit) {
      const SquareClass expected = square_class(disc, opts.p);
      if (!cls.delta_class || !(*cls.delta_class == expected) || expected.is_identity()) {
        run.flag("partition", "Nonsplit delta class mismatch", matrix_detail(a));
      } else {
        ++delta_counts[cls.delta_class->label()];
      }
    }
    ++kind_counts[kind_label(cls.kind)];
  }

  const std::size_t bound = opts.p.is_two() ? 7 : 3;
  if (delta_counts.size() > bound) {
    Json j;
    j["distinct"] = delta_counts.size();
    run.flag("partition", "more distinct Nonsplit delta classes than the group admits",
             std::move(j));
  }
  run.payload["classCounts"] = Json(kind_counts);
  run.payload["deltaCounts"] = Json(delta_counts);
  run.payload["deltaClassBound"] = bound;
  return run;
}

SuiteRun run_cover(const VerifyOptions& opts) {
  SuiteRun run;
  Sl2Sampler sampler(SamplerConfig{opts.seed});
  std::array<std::size_t, 4> histogram{0, 0, 0, 0};
  std::size_t violations = 0;

  for (std::size_t i = 0; i < opts.n; ++i) {
    const SL2Mat<Rational> m = sampler.next();
    try {
      const CoverWitness w = cover_witness(m, opts.p);
      ++histogram[w.index - 1];
      const Rational recomputed = (w.translate.inverse() * m).trace();
      if (recomputed != w.checked_trace || !(vp(w.checked_trace, opts.p) < Valuation(0))) {
        ++violations;
        run.flag("cover", "witness trace fails independent recomputation", matrix_detail(m));
      }
    } catch (const CoverageViolation&) {
      ++violations;
      run.flag("cover", "CoverageViolation: matrix escapes all four translates",
               matrix_detail(m));
    }
  }
  run.payload["histogram"] = Json(histogram);
  run.payload["violations"] = violations;
  return run;
}

Json family_detail(const std::vector<SL2Mat<Rational>>& family) {
  Json list = Json::array();
  for (const auto& a : family) list.push_back(detail::mat2_json(a.mat()));
  Json j;
  j["family"] = std::move(list);
  return j;
}

// Adversarial translate families: diagonal-only, antidiagonal-only, generic,
// and mixtures deliberately salted with zero-corner translates (a = 0 or
// d = 0) that stress the diagonal-witness construction.
std::vector<SL2Mat<Rational>> random_family(Sl2Sampler& sampler, long height) {
  Rng& rng = sampler.rng();
  const std::size_t size = 1 + rng.below(8);
  const unsigned mode = static_cast<unsigned>(rng.below(4));
  std::vector<SL2Mat<Rational>> family;
  family.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    const unsigned flavor = mode < 3 ? mode : static_cast<unsigned>(rng.below(5));
    switch (flavor) {
      case 0:
        family.push_back(sampler.next());
        break;
      case 1:
        family.push_back(random_q1_element(rng, height));
        break;
      case 2: {  // antidiagonal
        const Rational b = nonzero_rational(rng, height);
        family.push_back(SL2Mat<Rational>(Mat2<Rational>{0, b, -1 / b, 0}));
        break;
      }
      case 3: {  // a = 0 != d
        const Rational b = nonzero_rational(rng, height);
        family.push_back(
            SL2Mat<Rational>(Mat2<Rational>{0, b, -1 / b, nonzero_rational(rng, height)}));
        break;
      }
      default: {  // d = 0 != a
        const Rational b = nonzero_rational(rng, height);
        family.push_back(
            SL2Mat<Rational>(Mat2<Rational>{nonzero_rational(rng, height), b, -1 / b, 0}));
        break;
      }
    }
  }
  return family;
}

SuiteRun run_escape(const VerifyOptions& opts) {
  SuiteRun run;
  Sl2Sampler sampler(SamplerConfig{opts.seed});
  const long height = sampler.config().height;
  std::size_t antidiagonal_families = 0;
  std::size_t zero_corner_families = 0;
  std::size_t paper_successes = 0;

  for (std::size_t i = 0; i < opts.n; ++i) {
    const auto family = random_family(sampler, height);
    bool has_antidiag = false;
    bool has_upper_zero = false;  // a = 0 != d defeats the diagonal witness
    for (const auto& a : family) {
      const bool a_zero = a.mat().a11 == 0;
      const bool d_zero = a.mat().a22 == 0;
      if (a_zero && d_zero) has_antidiag = true;
      else if (a_zero) has_upper_zero = true;
    }
    antidiagonal_families += has_antidiag ? 1 : 0;
    zero_corner_families += has_upper_zero ? 1 : 0;

    try {
      const EscapeWitness w = escape_witness_general(family, opts.p);
      for (const auto& tr : w.per_translate_traces) {
        if (!(vp(tr, opts.p) < Valuation(0))) {
          run.flag("escape", "general witness trace has vp >= 0", family_detail(family));
        }
      }
    } catch (const Error& e) {
      run.flag("escape", std::string("general witness failed: ") + e.what(),
               family_detail(family));
    }

    // Expected dichotomy of the diagonal-witness construction: refuses
    // antidiagonal translates, self-rejects on a = 0 != d, succeeds
    // otherwise.
    try {
      const EscapeWitness w = escape_witness_paper(family, opts.p);
      (void)w;
      if (has_antidiag || has_upper_zero) {
        run.flag("escape", "diagonal witness unexpectedly succeeded", family_detail(family));
      } else {
        ++paper_successes;
      }
    } catch (const AntidiagonalTranslate&) {
      if (!has_antidiag) {
        run.flag("escape", "AntidiagonalTranslate without an antidiagonal translate",
                 family_detail(family));
      }
    } catch (const WitnessVerificationFailed&) {
      if (has_antidiag || !has_upper_zero) {
        run.flag("escape", "diagonal witness rejected a family it should handle",
                 family_detail(family));
      }
    }
  }
  run.payload["families"] = opts.n;
  run.payload["antidiagonalFamilies"] = antidiagonal_families;
  run.payload["zeroCornerFamilies"] = zero_corner_families;
  run.payload["diagonalWitnessSuccesses"] = paper_successes;
  return run;
}

SuiteRun run_w_orbit(const VerifyOptions& opts) {
  SuiteRun run;
  Sl2Sampler sampler(SamplerConfig{opts.seed});
  std::size_t in_w_count = 0;

  for (std::size_t i = 0; i < opts.n; ++i) {
    const SL2Mat<Rational> a = sampler.next();
    if (!in_w(a, opts.p)) continue;
    ++in_w_count;
    if (!w_orbit_check(a, opts.p)) {
      run.flag("w-orbit", "discriminant of a W element is not a square", matrix_detail(a));
    }
    if (classify(a, opts.p).kind != ClassKind::Split) {
      run.flag("w-orbit", "W element not classified Split", matrix_detail(a));
    }
  }

  // Complementary inclusion: conjugates of norm-1 torus elements stay
  // outside W.
  const std::size_t per_class = std::max<std::size_t>(1, opts.n / 100);
  std::size_t converse_checked = 0;
  for (const SquareClass& delta : SquareClass::nonidentity(opts.p)) {
    for (std::size_t i = 0; i < per_class; ++i) {
      const SL2Mat<Rational> t =
          random_qdelta_element(sampler.rng(), delta, sampler.config().height);
      const SL2Mat<Rational> c = conjugate(t, sampler.next().mat());
      ++converse_checked;
      if (in_w(c, opts.p)) {
        run.flag("w-orbit", "conjugate of a Q[" + delta.label() + "] element entered W",
                 matrix_detail(c));
      }
    }
  }
  run.payload["sampled"] = opts.n;
  run.payload["inW"] = in_w_count;
  run.payload["converseChecked"] = converse_checked;
  return run;
}

SuiteRun run_centralizer(const VerifyOptions& opts) {
  SuiteRun run;
  Sl2Sampler sampler(SamplerConfig{opts.seed});
  Rng& rng = sampler.rng();
  const long height = sampler.config().height;
  const PadicCtx ctx(opts.p, opts.precision);

  std::vector<SquareClass> classes;
  if (opts.delta_filter) {
    if (opts.delta_filter->is_identity()) {
      throw UnsupportedTag("delta filter must name a nonidentity square class");
    }
    classes.push_back(*opts.delta_filter);
  } else {
    classes = SquareClass::nonidentity(opts.p);
  }

  std::size_t checked = 0;
  const auto expect = [&](const SL2Mat<Rational>& a, SubgroupKind kind,
                          const std::optional<std::string>& delta_label) {
    ++checked;
    const CommutantBasis com = commutant_basis(a);
    if (com.dim != 2) {
      run.flag("centralizer", "regular element with commutant dimension != 2",
               matrix_detail(a));
      return;
    }
    const CentralizerInfo info = centralizer_tag(a, opts.p, opts.precision);
    if (info.central || !info.tag || info.tag->kind != kind) {
      run.flag("centralizer", "wrong centralizer tag", matrix_detail(a));
      return;
    }
    if (delta_label &&
        (!info.tag->delta || info.tag->delta->label() != *delta_label)) {
      run.flag("centralizer", "wrong delta class on centralizer tag", matrix_detail(a));
      return;
    }
    if (info.standard_copy != subgroup_membership(a, *info.tag)) {
      run.flag("centralizer", "standard-copy flag disagrees with membership",
               matrix_detail(a));
      return;
    }
    if (!info.standard_copy) {
      if (!info.witness || !conjugator_roundtrip_ok(a, *info.witness, ctx)) {
        run.flag("centralizer", "missing or non-roundtripping conjugating witness",
                 matrix_detail(a));
      }
    }
  };

  for (std::size_t i = 0; i < opts.n; ++i) {
    SL2Mat<Rational> t = random_q1_element(rng, height);
    while (discriminant(t) == 0) t = random_q1_element(rng, height);
    expect(t, SubgroupKind::Q1, std::nullopt);
    expect(conjugate(t, sampler.next().mat()), SubgroupKind::Q1, std::nullopt);

    for (const SquareClass& delta : classes) {
      const SL2Mat<Rational> s = random_qdelta_element(rng, delta, height);
      expect(s, SubgroupKind::Qdelta, delta.label());
      expect(conjugate(s, sampler.next().mat()), SubgroupKind::Qdelta, delta.label());
    }

    const SL2Mat<Rational> u = random_unipotent(rng, height);
    expect(u, SubgroupKind::U, std::nullopt);
    expect(conjugate(u, sampler.next().mat()), SubgroupKind::U, std::nullopt);
  }
  run.payload["elementsChecked"] = checked;
  run.payload["deltaClasses"] = classes.size();
  return run;
}

SuiteRun run_omega(const VerifyOptions& opts) {
  SuiteRun run;
  Sl2Sampler sampler(SamplerConfig{opts.seed});
  Rng& rng = sampler.rng();
  const long height = sampler.config().height;
  const SL2Mat<Rational> w = omega();

  if (!normalizer_checks(w, SubgroupTag::q1()) || subgroup_membership(w, SubgroupTag::q1())) {
    run.flag("omega", "omega must normalize the diagonal torus without lying in it",
             matrix_detail(w));
  }

  for (std::size_t i = 0; i < opts.n; ++i) {
    const SL2Mat<Rational> t = random_q1_element(rng, height);
    if (!(conjugate(t, w.mat()) == t.inverse())) {
      run.flag("omega", "conjugation by omega failed to invert a torus element",
               matrix_detail(t));
    }
    if (!(commutator(w, t) == t * t)) {
      run.flag("omega", "commutator with omega is not the square", matrix_detail(t));
    }
  }

  // The descending chain of iterated commutators out of diag(p, 1/p):
  // depth i lands on diag(p^(2^i), p^(-2^i)), a (2^i)-th power but never a
  // (2^(i+1))-th power.
  const Rational pr(opts.p.value());
  const SL2Mat<Rational> t0(Mat2<Rational>{pr, 0, 0, 1 / pr});
  for (unsigned depth = 1; depth <= 8; ++depth) {
    const SL2Mat<Rational> c = iterated_commutator(w, t0, depth);
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), opts.p.value().get_mpz_t(), 1UL << depth);
    const Rational entry(power);
    if (!(c == SL2Mat<Rational>(Mat2<Rational>{entry, 0, 0, 1 / entry}))) {
      run.flag("omega", "iterated commutator missed diag(p^(2^i), p^(-2^i)) at depth " +
                            std::to_string(depth),
               matrix_detail(c));
      continue;
    }
    if (!is_pow2k_power(entry, opts.p, depth, opts.precision) ||
        is_pow2k_power(entry, opts.p, depth + 1, opts.precision)) {
      run.flag("omega", "power-of-2^k certificate broke strict descent at depth " +
                            std::to_string(depth),
               matrix_detail(c));
    }
  }
  run.payload["toriChecked"] = opts.n;
  run.payload["chainDepth"] = 8;
  return run;
}

SuiteRun dispatch(Suite suite, const VerifyOptions& opts) {
  switch (suite) {
    case Suite::Partition: return run_partition(opts);
    case Suite::Cover: return run_cover(opts);
    case Suite::Escape: return run_escape(opts);
    case Suite::WOrbit: return run_w_orbit(opts);
    case Suite::Centralizer: return run_centralizer(opts);
    case Suite::Omega: return run_omega(opts);
    case Suite::All: break;
  }
  throw UnknownSuite("suite has no direct runner");
}

}  // namespace

VerifyOutcome run_suite(Suite suite, const VerifyOptions& opts) {
  static constexpr Suite kAll[] = {Suite::Partition, Suite::Cover,  Suite::Escape,
                                   Suite::WOrbit,    Suite::Centralizer, Suite::Omega};
  std::vector<std::pair<Suite, SuiteRun>> runs;
  if (suite == Suite::All) {
    for (Suite s : kAll) runs.emplace_back(s, dispatch(s, opts));
  } else {
    runs.emplace_back(suite, dispatch(suite, opts));
  }

  VerifyOutcome out;
  Json results = Json::object();
  for (auto& [s, r] : runs) {
    results[suite_name(s)] = std::move(r.payload);
    for (auto& line : r.lines) out.counterexamples.push_back(std::move(line));
  }
  out.counterexample_count = out.counterexamples.size();

  Json report;
  report["suite"] = suite_name(suite);
  report["p"] = detail::integer_json(opts.p.value());
  report["n"] = opts.n;
  report["seed"] = opts.seed;
  report["precision"] = opts.precision;
  report["results"] = std::move(results);
  report["counterexampleCount"] = out.counterexample_count;
  out.report_json = report.dump();
  return out;
}

}  // namespace padicsl2
