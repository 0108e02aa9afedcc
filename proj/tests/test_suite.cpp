#include "hopfsmash/suite.hpp"

#include <doctest.h>

using namespace hopfsmash;

// The clean run is exercised by the dedicated acceptance binary; here we
// prove the suite can actually fail: a single damaged comultiplication
// constant must trip the block power formula and nothing else.
TEST_CASE("perturbed suite detects the damaged structure constant") {
  SuiteOptions o;
  o.perturb = true;
  SuiteReport rep = run_acceptance_suite(o);
  CHECK_FALSE(rep.all_pass());

  size_t failing_power_checks = 0;
  bool n2_h8 = false, n2_n8 = false;
  for (const auto& c : rep.checks) {
    if (c.pass) continue;
    const bool power = c.name.find("block power formula") != std::string::npos;
    const bool umbrella = c.group.find("every pinned value") != std::string::npos;
    CAPTURE(c.group);
    CAPTURE(c.name);
    CHECK((power || umbrella));
    if (!power) continue;
    ++failing_power_checks;
    CHECK(c.name.find("perturbed") != std::string::npos);
    CHECK(c.name.find("n=1") == std::string::npos);  // Q_1 ignores comultiplication
    if (c.name.find("h8 smash, n=2") != std::string::npos) n2_h8 = true;
    if (c.name.find("nichols8 smash, n=2") != std::string::npos) n2_n8 = true;
  }
  CHECK(failing_power_checks >= 2);
  CHECK(n2_h8);
  CHECK(n2_n8);

  // Group bookkeeping reflects the failures.
  CHECK_FALSE(rep.group_pass("structural identity suites"));
  CHECK(rep.group_pass("square indicators of group algebras count involutions"));
}
