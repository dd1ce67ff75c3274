#pragma once

// Desk-scale acceptance checks. Each check carries its own oracle where one is needed
// (Catalan recurrence, an edge-by-edge propriety check, Euler counts) rather than
// reusing the code under test.

#include <functional>
#include <string>
#include <vector>

namespace safecol {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

std::vector<Criterion> acceptance_criteria();

/// Runs every criterion in id order. `on_result` sees each result as it finishes.
std::vector<CriterionResult> run_acceptance(
    const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace safecol
