#include <cstdio>

#include "tropbun/suite.hpp"

int main() {
  std::vector<tropbun::CriterionResult> results = tropbun::run_acceptance_suite();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::printf("%s  %2d %-22s  %ld instances  %.1fs%s\n",
                r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(), r.instances,
                r.seconds, r.pass ? "" : ("  [" + r.detail + "]").c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "acceptance: all criteria pass"
                          : "acceptance: at least one criterion fails");
  return all ? 0 : 1;
}
