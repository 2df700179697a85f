#pragma once

#include <string>

#include "bmod/sdes.hpp"

namespace bmod {

struct Claim {
  std::string name;
  std::string expected;
  std::string got;
  bool pass;
  int group = 0;  // acceptance criterion the claim belongs to, 0 if none
};

struct Report {
  std::string title;
  std::vector<Claim> claims;
  int current_group = 0;
  bool ok() const {
    for (const Claim& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

// The fully worked diagonal example: Q = Coker(s Delta), K = Ker(cok(s Delta)),
// the 70 endomorphisms, lifting counts, the 28-element cokernel, the 28 dual
// forms, the res/quot correspondence, condition (a) and the satellite value.
Report diagonal_example(const SearchLimits& limits = {});

// The three-generator example: S = B^3/(a+b = b+c), the sequence
// J -> B^3 ->> S, endomorphism counts, liftability, condition (a), SH(J).
Report s3_example(const SearchLimits& limits = {});

// The counterexample pack: strict-exactness vs mono, the missing epi-mono
// factorization, non-representability, the explicit cokernel and normal-image
// witnesses, non-modularity, sigma-injectivity failure and the radical
// pushout.
Report counterexample_regressions(const SearchLimits& limits = {});

}  // namespace bmod
