#pragma once

#include "bmod/inv.hpp"

namespace bmod {

// Normal image of a subobject E of F: the least kernel containing it.  All
// entry points first augment E with the fixed points and close under join and
// sigma.  The three routes must agree; `normal_image` runs the filtration and
// asserts the other two.
Mask normal_image_filtration(const InvPtr& f, const Mask& members);
Mask normal_image_biorthogonal(const InvPtr& f, const Mask& members);
Mask normal_image_cokernel(const InvPtr& f, const Mask& members);
Mask normal_image(const InvPtr& f, const Mask& members);

// The filtration level of xi: least n with xi in Im^(n), or 0 when xi is not
// in the normal image at all.
Idx normal_image_level(const InvPtr& f, const Mask& members, Idx xi);

bool is_normal_subobject(const InvPtr& f, const Mask& members);

Mask normal_image_of_morphism(const InvMorphism& h);  // Ker(cok(h))

struct Exactness {
  bool order_two = false;
  bool strict = false;
  bool exact = false;
};
Exactness exactness(const InvMorphism& f, const InvMorphism& g);

// The lattice of normal subobjects: meet is intersection, join is the normal
// closure of the sum.
struct NsbLattice {
  InvPtr owner;
  std::vector<Mask> members;  // canonical (bitset) order
  Idx index_of(const Mask& m) const;
  Idx meet(Idx a, Idx b) const;
  Idx join(Idx a, Idx b) const;
  bool leq(Idx a, Idx b) const;
};
NsbLattice nsb(const InvPtr& e, const SearchLimits& limits = {});

struct ModularityWitness {
  Idx e, f, g;  // e <= g and (e v f) ^ g != e v (f ^ g)
};
std::optional<ModularityWitness> modularity_failure(const NsbLattice& l);

Mask direct_image(const InvMorphism& f, const Mask& m);   // Im-bar(f o m)
Mask inverse_image(const InvMorphism& f, const Mask& m);  // f^{-1}(m)

// Subquotient axiom: given a normal subobject M of N (mask) containing
// Ker(q), for a normal epi q : N ->> Q, produce S = q(M) with the induced
// normal epi q' : M ->> S and normal mono k : S -> Q, so that q o m = k o q'.
struct Ex3Result {
  InvSub m_sub;       // M inside N
  InvSub s_sub;       // S inside Q
  InvMorphism qprime; // M -> S
};
Ex3Result ex3_subquotient(const InvPtr& n, const Mask& m_members, const InvMorphism& q);

bool is_normal_epi(const InvMorphism& q);
bool is_normal_mono(const InvMorphism& m);

// f is exact when the induced map Coim(f) -> Im-bar(f) in the canonical
// factorization is an isomorphism.
bool is_exact_morphism(const InvMorphism& f);

}  // namespace bmod
