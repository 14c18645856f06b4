#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padicsl2/padic.hpp"
#include "padicsl2/padic_approx.hpp"

namespace padicsl2 {

// The invariant suites the `verify` verb can run.
enum class Suite { Partition, Cover, Escape, WOrbit, Centralizer, Omega, All };

// Names are the CLI spellings: partition, cover, escape, w-orbit,
// centralizer, omega, all. UnknownSuite otherwise.
Suite parse_suite(const std::string& name);
std::string suite_name(Suite suite);

struct VerifyOptions {
  Prime p;
  std::size_t n = 1000;
  std::uint64_t seed = 0;
  unsigned precision = kDefaultPrecision;
  // Restrict the centralizer suite to one nonsplit class (all of them when
  // unset). Ignored by the other suites.
  std::optional<SquareClass> delta_filter;
};

struct VerifyOutcome {
  // Compact single-line JSON, keys sorted; byte-identical across runs with
  // the same options.
  std::string report_json;
  std::size_t counterexample_count = 0;
  // One compact JSON object per falsification event, carrying the offending
  // input. Intended for a line-delimited log.
  std::vector<std::string> counterexamples;
};

VerifyOutcome run_suite(Suite suite, const VerifyOptions& opts);

}  // namespace padicsl2
