#pragma once

// Property suites over one charge, shared by the command-line tool and the
// acceptance tests.

#include "kleshchev/branching.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace kleshchev {

struct SuiteResult {
  std::string name;
  std::string configuration;
  std::size_t checked = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // first few only
  /// Failures attributed to the reading convention, labelled as such.
  std::vector<std::string> convention_findings;
  std::vector<std::string> notes;

  bool passed() const noexcept { return failure_count == 0 && convention_findings.empty(); }
  void fail(std::string what);
};

/// Largest size examined by each suite.
struct VerifyLimits {
  int crystal = 10;
  int character = 8;
  int relations = 6;
  int canonical = 8;
  int kashiwara = 7;
  int projective = 7;
  int branching = 8;
  int dimension = 8;
  std::size_t vertex_cap = kDefaultVertexCap;

  /// Every suite capped at n, with the expansion suites at n - 1 so that no
  /// basis beyond rank n is needed.
  static VerifyLimits uniform(int n);
};

SuiteResult verify_crystal(const Multicharge& charge, int n_max, std::size_t vertex_cap = kDefaultVertexCap);
SuiteResult verify_character(const Multicharge& charge, int depth);
SuiteResult verify_relations(const Multicharge& charge, int n_max);
SuiteResult verify_canonical(CanonicalAtlas& atlas, int n_max);
SuiteResult verify_kashiwara(CanonicalAtlas& atlas, int n_max);
SuiteResult verify_projective(CanonicalAtlas& atlas, int n_max);
SuiteResult verify_branching(CanonicalAtlas& atlas, int n_max);
SuiteResult verify_dimension(CanonicalAtlas& atlas, int n_max);

/// All suites in the order above.
std::vector<SuiteResult> verify_all(CanonicalAtlas& atlas, const VerifyLimits& limits);

void write_suite_summary(std::ostream& out, const std::vector<SuiteResult>& results);
std::string suite_results_json(const std::vector<SuiteResult>& results);

}  // namespace kleshchev
