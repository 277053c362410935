#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twotree {

/// One named invariant, aggregated over every instance it was checked on.
struct Check {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& where);
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  Check& check(const std::string& name);
};

/// Kirchhoff = brute force = stream length = construction recurrence over
/// all_labeled_two_trees(n), n = 3..n_max. Throws Error(OutOfRange) unless
/// 3 <= n_max <= 8.
SuiteResult verify_oracle_suite(std::int64_t n_max);

/// Survey min/max and attainers for n = 4..n_max, plus strict improvement by
/// improve_min and improve_max on every applicable corpus graph.
/// Throws Error(OutOfRange) unless 4 <= n_max <= 8.
SuiteResult verify_extremal_suite(std::int64_t n_max);

/// 2^(n-2) <= T <= 3^(n-2) on `trials` random 2-trees with 2 <= n <= n_max.
SuiteResult verify_bounds_suite(std::uint64_t trials, std::uint64_t seed, std::int64_t n_max = 16);

/// Chain closed forms (p = 1..5 on hosts of 3..7 vertices), the one-vertex
/// step identity, and the glue table identities, `trials` instances each.
SuiteResult verify_identities_suite(std::uint64_t trials, std::uint64_t seed);

}  // namespace twotree
