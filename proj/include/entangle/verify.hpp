#pragma once

#include <string>
#include <vector>

#include "entangle/serialize.hpp"

namespace entangle {

// Outcome of one named property check inside a verification suite. A failing
// check carries a witness the library re-verifies as a genuine
// counterexample; a passing check may carry an informational note (skips
// forced by resource caps, reported comparisons).
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string note;
  ordered_json witness;  // null unless the check failed
};

// All checks of one suite, in deterministic order.
struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

// Suite names accepted by run_verification_suite, in presentation order:
// one suite per headline theorem or example, plus the backend comparison
// between the graph axiom and the abstract setting instantiated on graphs.
std::vector<std::string> verification_suites();

// Runs one suite over the corpus bounded by max_n. The bound applies to the
// exhaustive part of the corpus; named graphs always participate where the
// resource caps permit, and checks skipped under a cap pass with a note
// saying so. Unknown suite names are input errors.
SuiteReport run_verification_suite(const std::string& suite, int max_n = 7);

// {"suite": ..., "pass": ..., "checks": [...]} with per-check "note" only
// when nonempty and "witness" only on failure. Key order is fixed, so equal
// reports dump to equal bytes.
ordered_json suite_report_to_json(const SuiteReport& report);

}  // namespace entangle
