#pragma once

#include <optional>

#include "bmod/hom.hpp"
#include "bmod/module.hpp"

namespace bmod {

// Morphism of the Kleisli category Bmod^2: a raw pair of parallel morphisms,
// composing by (f,g)(f',g') = (f f' + g g', f g' + g f').
struct PairMorphism {
  Morphism f, g;
  PairMorphism(Morphism f_, Morphism g_);
  const ModulePtr& dom() const { return f.dom(); }
  const ModulePtr& cod() const { return f.cod(); }
  bool operator==(const PairMorphism& o) const { return f == o.f && g == o.g; }
  bool operator<(const PairMorphism& o) const { return std::tie(f, g) < std::tie(o.f, o.g); }
};

PairMorphism kappa(const Morphism& f);  // (f, 0)
PairMorphism pair_identity(const ModulePtr& m);
PairMorphism pair_compose(const PairMorphism& p, const PairMorphism& q);  // p after q

// Z(f,g) = {(x,y) : f(x)+g(y) = f(y)+g(x)}, the algebraic kernel.
struct PairSubmodule {
  Product square;
  Mask members;
};
PairSubmodule z_submodule(const PairMorphism& p);
// B(f,g) = {(f(x)+g(y), f(y)+g(x)) : x,y}.
PairSubmodule b_submodule(const PairMorphism& p);

struct SequencePair {
  PairMorphism left;   // L -> M
  PairMorphism right;  // M -> N
};

struct ExactnessWitness {
  bool exact;
  // On failure, a pair in the symmetric difference of B(left)+Delta and Z(right).
  std::optional<std::pair<Idx, Idx>> witness;
  bool witness_in_z;  // true: in Z but not B+Delta; false: the other way
};
ExactnessWitness strictly_exact_at(const SequencePair& s);

// The doubling map M^2 -> N^2, (x,y) -> (f(x)+g(y), g(x)+f(y)).
std::vector<Idx> doubling_map(const PairMorphism& p);

struct IsoDecomposition {
  Submodule n1, n2;    // hereditary factors of the codomain
  Morphism alpha;      // module isomorphism dom -> cod
};

struct PairClassification {
  bool mono = false, epi = false, iso = false;
  std::optional<IsoDecomposition> decomposition;
  // Witnesses: two points of M^2 identified by the doubling map (mono failure),
  // a pair of N^2 outside B (epi failure).
  std::optional<std::pair<Idx, Idx>> mono_witness;
  std::optional<Idx> epi_witness;
};
PairClassification classify(const PairMorphism& p);

// Units of Bmod^2(M), factored as the 2-group of product decompositions times
// the plain automorphism group.
struct AutGroup {
  std::vector<PairMorphism> units;           // all invertible pairs
  std::vector<PairMorphism> decompositions;  // Aut^(1): pairs of decomposition projections
  std::vector<Morphism> module_auts;         // Aut_Bmod(M)
  // factorization[i] = (d, a) with units[i] = decompositions[d] o kappa(module_auts[a])
  std::vector<std::pair<Idx, Idx>> factorization;
};
AutGroup aut_group(const ModulePtr& m, const SearchLimits& limits = {});

}  // namespace bmod
