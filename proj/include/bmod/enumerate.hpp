#pragma once

#include <cstdint>

#include "bmod/inv.hpp"

namespace bmod {

// All modules on n labeled elements (element 0 the zero), one per isomorphism
// class, enumerated through partial orders with joins.
std::vector<ModulePtr> modules_up_to_iso(Idx n);

// All involutions of m (automorphisms of order at most two).
std::vector<std::vector<Idx>> involutions(const ModulePtr& m);

// All involutive modules over modules_up_to_iso(n), one per Bmod^s iso class.
std::vector<InvPtr> inv_modules_up_to_iso(Idx n);

// Deterministic PRNG independent of the standard library distributions.
class SplitMix {
public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform-ish in [0, bound)
private:
  std::uint64_t state_;
};

// A pseudo-random module of exactly `size` elements, built as a join-closed
// subset of a Boolean module; returns nullptr if not found within `tries`.
ModulePtr sample_module(SplitMix& rng, Idx size, int tries = 200);

}  // namespace bmod
