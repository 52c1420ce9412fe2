#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qfam/report.hpp"

// Named verification suites. Each runs a fixed, seeded battery of checks with
// its own thresholds and returns a report; `run_suite("all", ...)` runs every
// suite in order.
namespace qfam::suites {

struct SuiteInfo {
  std::string name;
  int criterion;  // position in the acceptance list, 1-based
  std::string summary;
  std::function<CheckReport(std::uint64_t seed)> run;
};

const std::vector<SuiteInfo>& registry();

// Throws ParseError for an unknown name.
CheckReport run_suite(const std::string& name, std::uint64_t seed = 0);

CheckReport associativity(std::uint64_t seed);
CheckReport classical_maps(std::uint64_t seed);
CheckReport ergodicity(std::uint64_t seed);
CheckReport invariance(std::uint64_t seed);
CheckReport commutation(std::uint64_t seed);
CheckReport magic(std::uint64_t seed);
CheckReport projections(std::uint64_t seed);
CheckReport isometry(std::uint64_t seed);
CheckReport modular(std::uint64_t seed);
CheckReport cancellation(std::uint64_t seed);
CheckReport semigroup_laws(std::uint64_t seed);
CheckReport podles(std::uint64_t seed);

}  // namespace qfam::suites
