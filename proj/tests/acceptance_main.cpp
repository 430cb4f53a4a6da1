// Gate runner: one line per criterion, nonzero exit when any fails.

#include <cstdio>

#include "torilink/verify.hpp"

int main() {
  bool all_pass = true;
  for (const torilink::CriterionResult& r : torilink::run_acceptance()) {
    std::printf("criterion %2d %-24s %s  %s\n", r.number, r.name.c_str(),
                r.pass ? "pass" : "FAIL", r.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
