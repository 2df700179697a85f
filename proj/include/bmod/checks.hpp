#pragma once

#include "bmod/worked.hpp"

namespace bmod {

struct Criterion {
  int index;
  std::string title;
  std::vector<Claim> claims;
  bool ok() const {
    for (const Claim& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

// The property sweep: algebraic laws over all modules of size <= 4 and seeded
// samples at sizes 5-6.
Report property_suite(std::uint64_t seed, const SearchLimits& limits = {});

// The full acceptance battery; criteria 1-4 slice the diagonal example,
// 5 the three-generator example, 6 the regressions, 7 the property sweep.
std::vector<Criterion> acceptance_criteria(std::uint64_t seed = 20260809,
                                           const SearchLimits& limits = {});

}  // namespace bmod
