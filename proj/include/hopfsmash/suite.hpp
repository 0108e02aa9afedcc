#pragma once

#include "hopfsmash/indicators.hpp"
#include "hopfsmash/io.hpp"

namespace hopfsmash {

/// One verified equality or property.  group ties related checks to a
/// single acceptance line; detail carries the exact values compared.
struct SuiteCheck {
  std::string group;
  std::string name;
  bool pass;
  std::string detail;
};

struct SuiteOptions {
  /// 0 means the per-search library default (16 * dim * order).
  unsigned bound = 0;
  /// Damages one structure constant of a constructed smash coproduct
  /// before checking it, to prove the suite actually detects errors.
  bool perturb = false;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;

  bool all_pass() const;
  /// Group titles in first-seen order.
  std::vector<std::string> groups() const;
  bool group_pass(const std::string& group) const;
};

/// Runs every pinned value and every identity check: the twisted
/// indicator closed forms, integral pairings, smash indicator sum rules,
/// the smash exponent factorization, power/antipode/duality identities,
/// graded module checks, axiom suites, and the classical involution
/// counts.  All comparisons are exact.
SuiteReport run_acceptance_suite(const SuiteOptions& opts = {});

}  // namespace hopfsmash
