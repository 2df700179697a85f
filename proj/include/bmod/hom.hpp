#pragma once

#include <optional>

#include "bmod/module.hpp"

namespace bmod {

// Complete, duplicate-free list of morphisms dom -> cod, sorted
// lexicographically on the map tuples.  Enumeration runs over images of the
// join-irreducible generators with consistency pruning and throws
// LimitExceeded past `limits.max_states` visited states.
std::vector<Morphism> hom_set(const ModulePtr& dom, const ModulePtr& cod,
                              const SearchLimits& limits = {});

std::vector<Morphism> automorphisms(const ModulePtr& m, const SearchLimits& limits = {});

// An isomorphism m -> n as an element map, if one exists.  Backtracking over
// order-theoretic signatures.
std::optional<std::vector<Idx>> find_isomorphism(const ModulePtr& m, const ModulePtr& n);

bool isomorphic(const ModulePtr& m, const ModulePtr& n);

}  // namespace bmod
