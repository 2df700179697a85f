#pragma once

#include "bmod/module.hpp"

namespace bmod {

// Maximal proper ideals: the intervals [0,x] with x maximal among non-top
// elements.  The zero module has none.
std::vector<Ideal> maximal_ideals(const ModulePtr& m);

// x ~ y iff they have the same membership across all maximal ideals.  On the
// zero module this is the all-one-class congruence.
Congruence radical(const ModulePtr& m);
bool radical_trivial(const ModulePtr& m);

// True iff every element of the dual is a join of minimal nonzero dual
// elements, i.e. every ideal is an intersection of maximal ideals.
bool dual_min_generated(const ModulePtr& m);

// Distributive-lattice criterion for injectivity of a finite module.
bool is_injective_finite(const ModulePtr& m);

}  // namespace bmod
