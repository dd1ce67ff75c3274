// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <cstdio>

#include "safecol/acceptance.hpp"

int main() {
  bool all = true;
  safecol::run_acceptance([&](const safecol::CriterionResult& r) {
    all = all && r.pass;
    std::printf("%s criterion %d: %s (%s) [%.1fs]\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  });
  return all ? 0 : 1;
}
