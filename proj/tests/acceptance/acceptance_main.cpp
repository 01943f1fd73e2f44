// One line per criterion; exit status is nonzero if any criterion fails.
#include <cstdio>
#include <iostream>

#include "skein/harness.hpp"

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  int failures = 0;
  for (const auto& name : skein::suite_names()) {
    const skein::SuiteResult r = skein::run_suite(name);
    if (!r.pass) ++failures;
    std::printf("criterion %2d %-26s %s  %d/%zu checks  %.2fs", r.criterion, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.passed(), r.checks.size(), r.seconds);
    if (r.time_limit > 0) std::printf(" (limit %.0fs)", r.time_limit);
    if (!r.error.empty()) std::printf("  error: %s", r.error.c_str());
    std::printf("\n");
    if (verbose || !r.pass) {
      for (const auto& c : r.checks) {
        if (verbose || !c.pass)
          std::printf("    %s %s on %s: dev %.3g tol %.3g %s\n", c.pass ? "ok  " : "FAIL", c.identity.c_str(),
                      c.link.c_str(), c.rel_dev, c.tolerance, c.note.c_str());
      }
    }
    std::fflush(stdout);
  }
  std::printf("%s\n", failures == 0 ? "all criteria pass" : "some criteria FAIL");
  return failures == 0 ? 0 : 1;
}
