// Runs the eight acceptance criteria and prints one verdict line each.
// Exits 0 only when every criterion ran to completion and passed.

#include "mcat/acceptance.hpp"

#include <cstdio>

int main() {
  const mcat::AcceptanceOptions opt;
  const auto results = mcat::run_acceptance(opt);
  bool all_ok = true;
  for (const auto& r : results) {
    const char* verdict = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
    std::printf("criterion %d [%s] %s (%.3fs) %s\n", r.number, r.name.c_str(),
                verdict, r.seconds, r.detail.c_str());
    all_ok = all_ok && r.passed && !r.skipped;
  }
  std::printf("acceptance: %s\n", all_ok ? "all criteria passed" : "FAILED");
  return all_ok ? 0 : 1;
}
