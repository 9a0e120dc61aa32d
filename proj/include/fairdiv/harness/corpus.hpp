#pragma once

#include <string>
#include <vector>

namespace fairdiv::harness {

/// One frozen expectation; both sides are rendered as text so a mismatch
/// reads as a diff.
struct Check {
  std::string what;
  std::string expected;
  std::string actual;

  bool ok() const { return expected == actual; }
};

struct CaseResult {
  std::string name;
  std::vector<Check> checks;

  bool passed() const;
};

/// Runs every published example with a stored expectation. Hermetic and
/// deterministic.
std::vector<CaseResult> run_corpus();

}  // namespace fairdiv::harness
