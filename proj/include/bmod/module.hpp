#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bmod/base.hpp"

namespace bmod {

// A finite B-module: a join-semilattice with least element, stored as a dense
// join table.  Element 0 is always the zero.  Immutable after construction.
class BModule;
using ModulePtr = std::shared_ptr<const BModule>;

class BModule {
public:
  // Validates all laws; throws ValidationError naming the first violated one.
  BModule(std::vector<std::string> names, std::vector<Idx> join_table);

  static ModulePtr make(std::vector<std::string> names, std::vector<Idx> join_table);
  static ModulePtr make(std::vector<std::string> names,
                        const std::vector<std::vector<Idx>>& table);

  Idx size() const { return n_; }
  Idx join(Idx x, Idx y) const { return join_[static_cast<std::size_t>(x) * n_ + y]; }
  bool leq(Idx x, Idx y) const { return join(x, y) == y; }
  const std::string& name(Idx x) const { return names_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& names() const { return names_; }

  // Greatest lower bound; a finite join-semilattice with 0 has all meets.
  Idx meet(Idx x, Idx y) const;
  Idx top() const;
  Idx join_all(const std::vector<Idx>& xs) const;

  // Elements x != 0 that are not the join of the elements strictly below x.
  std::vector<Idx> join_irreducibles() const;
  bool covers(Idx x, Idx y) const;  // y covers x

  // Structural identity: same size and same join table (names ignored).
  bool same_structure(const BModule& other) const;

private:
  Idx n_;
  std::vector<std::string> names_;
  std::vector<Idx> join_;
};

// Join- and zero-preserving map between modules.  Construction validates.
class Morphism {
public:
  Morphism(ModulePtr dom, ModulePtr cod, std::vector<Idx> map);

  Idx operator()(Idx x) const { return map_[static_cast<std::size_t>(x)]; }
  const ModulePtr& dom() const { return dom_; }
  const ModulePtr& cod() const { return cod_; }
  const std::vector<Idx>& map() const { return map_; }

  bool is_injective() const;
  bool is_surjective() const;
  Mask range() const;

  bool operator==(const Morphism& other) const { return map_ == other.map_; }
  bool operator<(const Morphism& other) const { return map_ < other.map_; }

private:
  ModulePtr dom_, cod_;
  std::vector<Idx> map_;
};

Morphism identity(const ModulePtr& m);
Morphism zero_morphism(const ModulePtr& dom, const ModulePtr& cod);
Morphism compose(const Morphism& f, const Morphism& g);  // f after g
Morphism join_morphisms(const Morphism& f, const Morphism& g);  // pointwise

ModulePtr zero_module();
bool is_morphism_map(const BModule& dom, const BModule& cod, const std::vector<Idx>& map);

// ---- Ideals (hereditary submodules) -----------------------------------------

// A nonempty hereditary submodule; on a finite module these are exactly the
// intervals [0, x].
struct Ideal {
  ModulePtr owner;
  Mask members;
  Idx generator;  // the top of the interval
  bool contains(Idx x) const { return members[static_cast<std::size_t>(x)]; }
};

// All ideals, each once, sorted by member bitset.  This list is the dual M*.
std::vector<Ideal> ideals(const ModulePtr& m);
Ideal principal_ideal(const ModulePtr& m, Idx x);

// The dual module M* = Hom(M, B): carrier = ideals(m) in canonical order,
// join = intersection of ideals, zero = the full ideal (the zero map).
struct DualModule {
  ModulePtr module;
  std::vector<Ideal> ideal_of;   // dual element -> its ideal
  std::vector<Idx> elem_to_dual; // x in M -> index of [0,x] in the dual
};
DualModule dual(const ModulePtr& m);
// eval(phi, x) in B: 0 iff x lies in the ideal of phi.
Idx dual_eval(const DualModule& d, Idx phi, Idx x);

// ---- Products and submodules -------------------------------------------------

struct Product {
  ModulePtr module;
  ModulePtr left, right;
  Morphism p1, p2;  // projections
  Morphism s1, s2;  // inclusions
  Idx pair_index(Idx x, Idx y) const;
  std::pair<Idx, Idx> unpair(Idx z) const;
};
Product product(const ModulePtr& m, const ModulePtr& n);

// A join-closed subset containing 0, repackaged as a module of its own.
struct Submodule {
  ModulePtr parent;
  ModulePtr module;
  Morphism inclusion;          // module -> parent
  std::vector<Idx> elems;      // submodule index -> parent index
  std::vector<Idx> index_in;   // parent index -> submodule index or -1
};
Submodule submodule(const ModulePtr& m, const Mask& members);
Mask join_closure(const BModule& m, Mask members);  // adds 0 and closes under joins

// ---- Congruences, quotients, (co)equalizers ----------------------------------

// A join-compatible partition, normalized so classes are numbered by first
// occurrence and the class of 0 is 0.
class Congruence {
public:
  static Congruence discrete(ModulePtr m);
  static Congruence indiscrete(ModulePtr m);
  // Least join-compatible equivalence containing the seed pairs.
  static Congruence generated(ModulePtr m, const std::vector<std::pair<Idx, Idx>>& seeds);
  // Validates join-compatibility of an explicit class assignment.
  static Congruence from_classes(ModulePtr m, std::vector<Idx> class_of);

  const ModulePtr& owner() const { return owner_; }
  Idx class_of(Idx x) const { return class_of_[static_cast<std::size_t>(x)]; }
  Idx class_count() const { return classes_; }
  bool is_equality() const { return classes_ == owner_->size(); }
  bool same_partition(const Congruence& other) const { return class_of_ == other.class_of_; }
  const std::vector<Idx>& classes() const { return class_of_; }

private:
  Congruence(ModulePtr owner, std::vector<Idx> class_of, Idx classes)
      : owner_(std::move(owner)), class_of_(std::move(class_of)), classes_(classes) {}
  static Congruence normalize(ModulePtr owner, const std::vector<Idx>& raw_class_of);
  ModulePtr owner_;
  std::vector<Idx> class_of_;
  Idx classes_;
};

struct Quotient {
  ModulePtr module;
  Morphism projection;
  Congruence congruence;
};
Quotient quotient(const ModulePtr& m, const Congruence& c);

Submodule equalizer(const Morphism& f, const Morphism& g);
Quotient coequalizer(const Morphism& f, const Morphism& g);

// ---- Kernel pairs, images ------------------------------------------------------

struct KernelPair {
  Product square;       // dom x dom
  Submodule sub;        // {(x,y) : f(x)=f(y)} inside the square
  Morphism i1, i2;      // the two restricted projections
};
KernelPair kernel_pair(const Morphism& f);

Quotient coimage(const Morphism& f);  // quotient of dom by f(x)=f(y)

struct CokernelPair {
  Product square;       // cod x cod
  Quotient quot;        // coequalizer of (s1 f, s2 f), a quotient of the square
  Morphism gamma1, gamma2;  // cod -> quotient
};
CokernelPair cokernel_pair(const Morphism& f);

Submodule image(const Morphism& f);  // equalizer of the cokernel-pair maps

// ---- Separation / extension ----------------------------------------------------

// Largest extension to m of a functional given on the submodule `sub`.
Ideal extend_functional(const Submodule& sub, const Ideal& phi);

// Two functionals agreeing on the submodule and separating xi from it.
std::pair<Ideal, Ideal> separate(const ModulePtr& m, const Mask& submodule_members, Idx xi);

}  // namespace bmod
