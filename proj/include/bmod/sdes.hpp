#pragma once

#include "bmod/normal.hpp"

namespace bmod {

// Kernel-cokernel pair: a' = ker(a''), a'' = cok(a').
struct ShortDoublyExact {
  InvPtr left, mid, right;
  InvMorphism aprime;        // left -> mid
  InvMorphism adoubleprime;  // mid -> right
};

class NotKernel : public Error {
public:
  explicit NotKernel(const std::string& what) : Error(what) {}
};
class NotCokernel : public Error {
public:
  explicit NotCokernel(const std::string& what) : Error(what) {}
};
class ConditionAFailed : public Error {
public:
  explicit ConditionAFailed(const std::string& what) : Error(what) {}
};

struct SdesReport {
  ShortDoublyExact seq;
  bool five_term_exact;   // 0 -> A' -> A -> A'' -> 0 exact at each node
  bool maps_exact;        // both structural maps are exact morphisms
};
SdesReport validate_sdes(const InvMorphism& aprime, const InvMorphism& adoubleprime);

// The trivial resolution A = A ->> A^sigma: weakly final over A when A is
// injective; evaluates the satellite to a null object.
ShortDoublyExact trivial_resolution(const InvPtr& a);

// A short doubly exact sequence has a section iff a'' splits in Bmod^s.
bool sdes_split(const ShortDoublyExact& s, const SearchLimits& limits = {});

// ---- The internal Hom endofunctor F = Hom(Q,-) ---------------------------------

class FunctorF {
public:
  FunctorF(InvPtr q, SearchLimits limits = {}) : q_(std::move(q)), limits_(limits) {}
  const InvPtr& q() const { return q_; }
  const HomObject& at(const InvPtr& m) const;           // F(M), memoized
  InvMorphism map(const InvMorphism& t) const;          // F(t), post-composition
private:
  InvPtr q_;
  SearchLimits limits_;
  mutable std::vector<std::pair<InvPtr, std::shared_ptr<const HomObject>>> cache_;
};

// Coker(F(a'')) with its quotient data.
struct CokerF {
  InvQuotient coker;   // quotient of F(right)
  HomObject f_right;   // F(A'')
  HomObject f_mid;     // F(A)
  InvMorphism f_map;   // F(a'') : F(A) -> F(A'')
};
CokerF coker_F(const ShortDoublyExact& seq, const FunctorF& F);

// ---- Comma objects, extension fans, condition (a) --------------------------------

struct CommaObject {
  ShortDoublyExact seq;
  InvMorphism x;  // seq.left -> X
};

struct ExtensionFan {
  InvMorphism v;                       // C' -> I'
  std::vector<InvMorphism> extensions; // all w : C -> I with w c' = a' v
  std::vector<InvMorphism> induced;    // the distinct w'' : C'' -> I''
};
// Requires the middle of iota to be injective; the fan is then nonempty.
ExtensionFan extension_fan(const ShortDoublyExact& iota, const ShortDoublyExact& c,
                           const InvMorphism& v, const SearchLimits& limits = {});

// The action of w'' on the Hom cokernels: class(u) -> class(w'' o u).
// Throws if the assignment is not well-defined.
std::vector<Idx> induced_coker_action(const InvMorphism& wpp, const CokerF& target,
                                      const CokerF& source, const FunctorF& F);

struct ConditionAResult {
  bool holds = true;
  // per endomorphism v of iota.left: the (unique, when holds) action on
  // Coker(F(a'')) as a class map
  std::vector<std::pair<InvMorphism, std::vector<Idx>>> action_table;
  std::optional<std::string> counterexample;
};
// scope = all endomorphisms of iota.left; with iota.mid injective and
// projective this decides condition (a) for arbitrary morphisms c -> iota.
ConditionAResult condition_a_endomorphisms(const ShortDoublyExact& iota, const FunctorF& F,
                                           const SearchLimits& limits = {});
// condition (a) for an explicit list of comma objects.
ConditionAResult condition_a_for(const ShortDoublyExact& iota, const FunctorF& F,
                                 const std::vector<CommaObject>& cs,
                                 const SearchLimits& limits = {});

// ---- Satellite ---------------------------------------------------------------------

struct SatelliteResult {
  InvPtr source;                // X
  ShortDoublyExact resolution;  // the weakly final object used
  CokerF value;                 // SF(X) = Coker(F(a''))
  InvMorphism d;                // connecting map F(A'') -> SF(X)
  ConditionAResult actions;     // verified End(X)-action table
};
SatelliteResult satellite_eval(const FunctorF& F, const InvPtr& x, const ShortDoublyExact& iota,
                               const SearchLimits& limits = {});

struct SixTermSequence {
  HomObject fa_prime, fa, fa_doubleprime;
  InvMorphism f_aprime, f_adoubleprime;
  CokerF sf_aprime;           // SF(A'), evaluated at the given sequence
  InvQuotient sf_a;           // SF(A), evaluated at the trivial resolution (null)
  InvQuotient sf_adoubleprime;// SF(A''), evaluated at the trivial resolution (null)
  InvMorphism d;              // F(A'') -> SF(A')
  InvMorphism sf_map_aprime;  // SF(A') -> SF(A)
  InvMorphism sf_map_adoubleprime;  // SF(A) -> SF(A'')
};
// Requires the middle term injective (and projective for the satellite
// evaluation to be the colimit value).  Asserts all consecutive composites
// are null.
SixTermSequence satellite_sequence(const ShortDoublyExact& seq, const FunctorF& F,
                                   const SearchLimits& limits = {});

// ---- Chain complexes ------------------------------------------------------------------

// objects[i] for i = 0..k; differentials d[i] : objects[i] -> objects[i-1]
// for i = 1..k; all consecutive composites must be null.
struct ChainComplex {
  std::vector<InvPtr> objects;
  std::vector<InvMorphism> differentials;
};
ChainComplex make_complex(std::vector<InvPtr> objects, std::vector<InvMorphism> differentials);

// H_n = Ker(d_n) / Im-bar(d_{n+1}) as an ex3 subquotient.
std::vector<InvPtr> homology(const ChainComplex& cx);

}  // namespace bmod
