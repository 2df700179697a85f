#pragma once

#include "bmod/module.hpp"

namespace bmod {

// Right adjoint of f in the Galois connection sense: g(y) = v{x : f(x) <= y}.
// Monotone but not a module morphism in general.
std::vector<Idx> galois_adjoint(const Morphism& f);

// Canonical factorization f = inj o q through the support S = {z : c(z) = z},
// c = g o f.  S carries the lattice structure induced by its order; its join
// is c(x v y), so S is generally not a submodule of the domain.
struct SupportDecomposition {
  Morphism f;
  Mask support;              // subset of dom
  std::vector<Idx> elems;    // S index -> dom index
  ModulePtr s;               // S as a module of its own
  Morphism q;                // dom -> S, surjective
  Morphism inj;              // S -> cod, injective
  std::vector<Idx> adjoint;  // the monotone map g : cod -> dom
};

SupportDecomposition support_decomposition(const Morphism& f);

}  // namespace bmod
