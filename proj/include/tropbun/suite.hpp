#pragma once

#include <string>
#include <vector>

namespace tropbun {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  long instances = 0;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 = no explicit budget
  std::string detail;           // first failure if any, else a summary
};

// Runs the ten acceptance checks in order. A criterion that throws fails with
// the exception text as its detail; the remaining criteria still run. A
// criterion with a budget also fails when it exceeds it.
std::vector<CriterionResult> run_acceptance_suite();

}  // namespace tropbun
