// Acceptance battery: one pass/fail line per criterion, detailed claim lines
// underneath, nonzero exit on any failure.

#include <cstdio>
#include <cstring>

#include "bmod/checks.hpp"

int main(int argc, char** argv) {
  bool verbose = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "-v") == 0 || std::strcmp(argv[i], "--verbose") == 0) verbose = true;
  bool all_ok = true;
  try {
    auto criteria = bmod::acceptance_criteria();
    for (const bmod::Criterion& c : criteria) {
      bool ok = c.ok();
      all_ok = all_ok && ok;
      std::printf("%s criterion %d: %s (%zu checks)\n", ok ? "PASS" : "FAIL", c.index,
                  c.title.c_str(), c.claims.size());
      for (const bmod::Claim& cl : c.claims)
        if (!cl.pass || verbose)
          std::printf("  %s %s: expected %s, got %s\n", cl.pass ? "ok  " : "FAIL",
                      cl.name.c_str(), cl.expected.c_str(), cl.got.c_str());
    }
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance run aborted: %s\n", e.what());
    return 1;
  }
  return all_ok ? 0 : 1;
}
