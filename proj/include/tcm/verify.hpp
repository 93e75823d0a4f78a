#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcm {

enum class VerifyScale { Small, Full };

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The acceptance criteria, executed at their stated tolerances. Small scale
// runs criteria 1-9; Full adds the large-order oracle spot checks.
std::vector<CriterionResult> run_acceptance(VerifyScale scale);

// Run a single criterion by index (1-based; 10 = full-scale spot checks).
CriterionResult run_criterion(int index);

int criterion_count(VerifyScale scale);

void print_results(const std::vector<CriterionResult>& results,
                   std::ostream& out);

}  // namespace tcm
