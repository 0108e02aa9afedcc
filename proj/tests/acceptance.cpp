// Acceptance gate: runs the full value-and-identity suite and prints one
// PASS/FAIL line per criterion group, with failing checks expanded.
// Exit status 0 only when every exact comparison holds.
#include <cstdio>
#include <exception>

#include "hopfsmash/suite.hpp"

int main() {
  using namespace hopfsmash;
  try {
    const SuiteReport report = run_acceptance_suite();
    for (const auto& g : report.groups()) {
      const bool ok = report.group_pass(g);
      std::printf("%s  %s\n", ok ? "PASS" : "FAIL", g.c_str());
      if (ok) continue;
      for (const auto& c : report.checks)
        if (c.group == g && !c.pass)
          std::printf("      failed: %s (%s)\n", c.name.c_str(), c.detail.c_str());
    }
    std::printf("%zu checks in %zu groups: %s\n", report.checks.size(), report.groups().size(),
                report.all_pass() ? "all pass" : "FAILURES PRESENT");
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unhandled error: %s\n", e.what());
    return 1;
  }
}
