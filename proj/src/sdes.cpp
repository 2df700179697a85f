#include "bmod/sdes.hpp"

#include <algorithm>
#include <sstream>

namespace bmod {

SdesReport validate_sdes(const InvMorphism& aprime, const InvMorphism& adoubleprime) {
  if (!aprime.cod()->same_structure(*adoubleprime.dom()))
    throw DomainMismatch("validate_sdes: the maps do not compose");
  const InvPtr& mid = adoubleprime.dom();
  // a' = ker(a''): injective with range exactly the kernel
  if (!aprime.is_injective()) throw NotKernel("validate_sdes: a' is not injective");
  InvSub ker = inv_kernel(adoubleprime);
  Mask range = aprime.range();
  for (Idx x = 0; x < mid->size(); ++x)
    if (range[static_cast<std::size_t>(x)] != ker.members[static_cast<std::size_t>(x)]) {
      std::ostringstream os;
      os << "validate_sdes: range of a' differs from Ker(a'') at element '" << mid->name(x) << "'";
      throw NotKernel(os.str());
    }
  // a'' = cok(a'): surjective with fibers the cokernel congruence
  if (!adoubleprime.is_surjective()) throw NotCokernel("validate_sdes: a'' is not surjective");
  InvQuotient cok = inv_cokernel(aprime);
  for (Idx x = 0; x < mid->size(); ++x)
    for (Idx y = x + 1; y < mid->size(); ++y)
      if ((adoubleprime(x) == adoubleprime(y)) != (cok.projection(x) == cok.projection(y))) {
        std::ostringstream os;
        os << "validate_sdes: a'' identifies '" << mid->name(x) << "' and '" << mid->name(y)
           << "' differently from cok(a')";
        throw NotCokernel(os.str());
      }
  ShortDoublyExact seq{aprime.dom(), mid, adoubleprime.cod(), aprime, adoubleprime};
  SdesReport rep{seq, false, false};
  Exactness at_left = exactness(inv_zero(zero_inv(), seq.left), aprime);
  Exactness at_mid = exactness(aprime, adoubleprime);
  Exactness at_right = exactness(adoubleprime, inv_zero(seq.right, zero_inv()));
  rep.five_term_exact = at_left.exact && at_mid.exact && at_right.exact;
  rep.maps_exact = is_exact_morphism(aprime) && is_exact_morphism(adoubleprime);
  return rep;
}

ShortDoublyExact trivial_resolution(const InvPtr& a) {
  InvQuotient q = inv_cokernel(inv_identity(a));
  return ShortDoublyExact{a, a, q.object, inv_identity(a), q.projection};
}

bool sdes_split(const ShortDoublyExact& s, const SearchLimits& limits) {
  for (const InvMorphism& sec : inv_hom_set(s.right, s.mid, limits))
    if (inv_compose(s.adoubleprime, sec) == inv_identity(s.right)) return true;
  return false;
}

const HomObject& FunctorF::at(const InvPtr& m) const {
  for (const auto& [key, value] : cache_)
    if (key->same_structure(*m)) return *value;
  cache_.emplace_back(m, std::make_shared<const HomObject>(hom_object(q_, m, limits_)));
  return *cache_.back().second;
}

InvMorphism FunctorF::map(const InvMorphism& t) const {
  const HomObject& src = at(t.dom());
  const HomObject& dst = at(t.cod());
  std::vector<Idx> map(src.elements.size());
  for (std::size_t i = 0; i < src.elements.size(); ++i)
    map[i] = dst.index_of(inv_compose(t, src.elements[i]).map());
  return InvMorphism(src.object, dst.object, std::move(map));
}

CokerF coker_F(const ShortDoublyExact& seq, const FunctorF& F) {
  HomObject f_right = F.at(seq.right);
  HomObject f_mid = F.at(seq.mid);
  InvMorphism f_map = F.map(seq.adoubleprime);
  InvQuotient coker = inv_cokernel(f_map);
  return CokerF{std::move(coker), std::move(f_right), std::move(f_mid), std::move(f_map)};
}

ExtensionFan extension_fan(const ShortDoublyExact& iota, const ShortDoublyExact& c,
                           const InvMorphism& v, const SearchLimits& limits) {
  if (!v.dom()->same_structure(*c.left) || !v.cod()->same_structure(*iota.left))
    throw DomainMismatch("extension_fan: v must map the left terms");
  ExtensionFan fan{v, {}, {}};
  InvMorphism target = inv_compose(iota.aprime, v);
  for (const InvMorphism& w : inv_hom_set(c.mid, iota.mid, limits)) {
    bool ok = true;
    for (Idx x = 0; x < c.left->size() && ok; ++x)
      if (w(c.aprime(x)) != target(x)) ok = false;
    if (ok) fan.extensions.push_back(w);
  }
  if (fan.extensions.empty())
    throw Error("extension_fan: no extension exists; is the middle term injective?");
  // each extension induces a map on the quotients
  std::vector<std::vector<Idx>> seen;
  for (const InvMorphism& w : fan.extensions) {
    std::vector<Idx> wpp(static_cast<std::size_t>(c.right->size()), -1);
    for (Idx x = 0; x < c.mid->size(); ++x) {
      Idx cls = c.adoubleprime(x);
      Idx val = iota.adoubleprime(w(x));
      if (wpp[static_cast<std::size_t>(cls)] >= 0 && wpp[static_cast<std::size_t>(cls)] != val)
        throw Error("extension_fan: extension does not descend to the right terms");
      wpp[static_cast<std::size_t>(cls)] = val;
    }
    if (std::find(seen.begin(), seen.end(), wpp) == seen.end()) seen.push_back(wpp);
  }
  std::sort(seen.begin(), seen.end());
  for (auto& m : seen) fan.induced.emplace_back(c.right, iota.right, std::move(m));
  return fan;
}

std::vector<Idx> induced_coker_action(const InvMorphism& wpp, const CokerF& target,
                                      const CokerF& source, const FunctorF& F) {
  // class(u) -> class(wpp o u) for u in F(C'').
  std::vector<Idx> action(static_cast<std::size_t>(source.coker.object->size()), -1);
  for (std::size_t i = 0; i < source.f_right.elements.size(); ++i) {
    Idx cls = source.coker.projection(static_cast<Idx>(i));
    InvMorphism composed = inv_compose(wpp, source.f_right.elements[i]);
    Idx val = target.coker.projection(target.f_right.index_of(composed.map()));
    if (action[static_cast<std::size_t>(cls)] >= 0 && action[static_cast<std::size_t>(cls)] != val)
      throw Error("induced_coker_action: the action is not well-defined on classes");
    action[static_cast<std::size_t>(cls)] = val;
  }
  (void)F;
  return action;
}

namespace {

ConditionAResult condition_a_impl(const ShortDoublyExact& iota, const FunctorF& F,
                                  const std::vector<CommaObject>& cs, const SearchLimits& limits) {
  ConditionAResult res;
  CokerF target = coker_F(iota, F);
  std::vector<std::pair<const ShortDoublyExact*, CokerF>> source_cache;
  auto source_for = [&](const ShortDoublyExact& s) -> const CokerF& {
    for (const auto& [key, value] : source_cache)
      if (key == &s || (key->mid->same_structure(*s.mid) && key->right->same_structure(*s.right) &&
                        key->adoubleprime == s.adoubleprime))
        return value;
    source_cache.emplace_back(&s, coker_F(s, F));
    return source_cache.back().second;
  };
  for (const CommaObject& c : cs) {
    ExtensionFan fan = extension_fan(iota, c.seq, c.x, limits);
    const CokerF& source = source_for(c.seq);
    std::optional<std::vector<Idx>> common;
    for (const InvMorphism& wpp : fan.induced) {
      std::vector<Idx> action = induced_coker_action(wpp, target, source, F);
      if (!common) {
        common = action;
      } else if (*common != action) {
        res.holds = false;
        std::ostringstream os;
        os << "condition (a) fails: two induced actions differ for some extension fan";
        res.counterexample = os.str();
        return res;
      }
    }
    res.action_table.emplace_back(c.x, *common);
  }
  return res;
}

}  // namespace

ConditionAResult condition_a_endomorphisms(const ShortDoublyExact& iota, const FunctorF& F,
                                           const SearchLimits& limits) {
  std::vector<CommaObject> cs;
  for (const InvMorphism& v : inv_hom_set(iota.left, iota.left, limits))
    cs.push_back(CommaObject{iota, v});
  return condition_a_impl(iota, F, cs, limits);
}

ConditionAResult condition_a_for(const ShortDoublyExact& iota, const FunctorF& F,
                                 const std::vector<CommaObject>& cs, const SearchLimits& limits) {
  return condition_a_impl(iota, F, cs, limits);
}

SatelliteResult satellite_eval(const FunctorF& F, const InvPtr& x, const ShortDoublyExact& iota,
                               const SearchLimits& limits) {
  if (!iota.left->same_structure(*x))
    throw PreconditionViolated("satellite_eval: the resolution must start at X");
  if (!is_injective_obj(iota.mid) || !is_projective_obj(iota.mid))
    throw PreconditionViolated("satellite_eval: the middle term must be injective and projective");
  ConditionAResult actions = condition_a_endomorphisms(iota, F, limits);
  if (!actions.holds)
    throw ConditionAFailed(actions.counterexample.value_or("condition (a) fails"));
  CokerF value = coker_F(iota, F);
  InvMorphism d(value.f_right.object, value.coker.object, value.coker.projection.map());
  return SatelliteResult{x, iota, std::move(value), std::move(d), std::move(actions)};
}

SixTermSequence satellite_sequence(const ShortDoublyExact& seq, const FunctorF& F,
                                   const SearchLimits& limits) {
  if (!is_injective_obj(seq.mid))
    throw PreconditionViolated("satellite_sequence: the middle term must be injective");
  HomObject fa_prime = F.at(seq.left);
  HomObject fa = F.at(seq.mid);
  HomObject fa_doubleprime = F.at(seq.right);
  InvMorphism f_aprime = F.map(seq.aprime);
  InvMorphism f_adoubleprime = F.map(seq.adoubleprime);
  CokerF sf_aprime = coker_F(seq, F);
  // SF(A) and SF(A'') evaluated at the trivial resolutions, which are the
  // dominating index objects: both values are null.
  ShortDoublyExact triv_a = trivial_resolution(seq.mid);
  ShortDoublyExact triv_app = trivial_resolution(seq.right);
  CokerF sf_a_full = coker_F(triv_a, F);
  CokerF sf_app_full = coker_F(triv_app, F);
  // the connecting morphism d = phi_i o cok(F(a'')) with phi_i the identity leg
  InvMorphism d(sf_aprime.f_right.object, sf_aprime.coker.object,
                sf_aprime.coker.projection.map());
  // SF(a'): induced by the morphism of sequences (a', id, h) with
  // h : A'' -> A^sigma, h(a''(x)) = p(x).
  std::vector<Idx> hmap(static_cast<std::size_t>(seq.right->size()), -1);
  for (Idx m = 0; m < seq.mid->size(); ++m) {
    Idx cls = seq.adoubleprime(m);
    Idx val = triv_a.adoubleprime(m);
    if (hmap[static_cast<std::size_t>(cls)] >= 0 && hmap[static_cast<std::size_t>(cls)] != val)
      throw Error("satellite_sequence: the comparison map is not well-defined");
    hmap[static_cast<std::size_t>(cls)] = val;
  }
  InvMorphism h(seq.right, triv_a.right, std::move(hmap));
  std::vector<Idx> sf_ap = induced_coker_action(h, sf_a_full, sf_aprime, F);
  InvMorphism sf_map_aprime(sf_aprime.coker.object, sf_a_full.coker.object, std::move(sf_ap));
  // SF(a''): between the trivial resolutions, induced by cok of a''.
  std::vector<Idx> kmap(static_cast<std::size_t>(triv_a.right->size()), -1);
  for (Idx m = 0; m < seq.mid->size(); ++m) {
    Idx cls = triv_a.adoubleprime(m);
    Idx val = triv_app.adoubleprime(seq.adoubleprime(m));
    if (kmap[static_cast<std::size_t>(cls)] >= 0 && kmap[static_cast<std::size_t>(cls)] != val)
      throw Error("satellite_sequence: the comparison map is not well-defined");
    kmap[static_cast<std::size_t>(cls)] = val;
  }
  InvMorphism k(triv_a.right, triv_app.right, std::move(kmap));
  std::vector<Idx> sf_app = induced_coker_action(k, sf_app_full, sf_a_full, F);
  InvMorphism sf_map_adoubleprime(sf_a_full.coker.object, sf_app_full.coker.object,
                                  std::move(sf_app));
  // order two throughout
  auto check_null = [&](const InvMorphism& f1, const InvMorphism& f2, const char* where) {
    InvMorphism c = inv_compose(f2, f1);
    if (!is_null(c)) throw Error(std::string("satellite_sequence: composite not null at ") + where);
  };
  check_null(f_aprime, f_adoubleprime, "F(A)");
  check_null(f_adoubleprime, d, "F(A'')");
  check_null(d, sf_map_aprime, "SF(A')");
  check_null(sf_map_aprime, sf_map_adoubleprime, "SF(A)");
  (void)limits;
  return SixTermSequence{std::move(fa_prime), std::move(fa),        std::move(fa_doubleprime),
                         std::move(f_aprime), std::move(f_adoubleprime),
                         std::move(sf_aprime), std::move(sf_a_full.coker),
                         std::move(sf_app_full.coker), std::move(d),
                         std::move(sf_map_aprime), std::move(sf_map_adoubleprime)};
}

ChainComplex make_complex(std::vector<InvPtr> objects, std::vector<InvMorphism> differentials) {
  if (differentials.size() + 1 != objects.size() && !(objects.empty() && differentials.empty()))
    throw PreconditionViolated("make_complex: need one differential between consecutive objects");
  for (std::size_t i = 0; i < differentials.size(); ++i) {
    if (!differentials[i].dom()->same_structure(*objects[i + 1]) ||
        !differentials[i].cod()->same_structure(*objects[i]))
      throw DomainMismatch("make_complex: differential endpoints do not match");
    if (i + 1 < differentials.size()) {
      InvMorphism c = inv_compose(differentials[i], differentials[i + 1]);
      if (!is_null(c)) throw PreconditionViolated("make_complex: consecutive differentials are not null");
    }
  }
  return ChainComplex{std::move(objects), std::move(differentials)};
}

std::vector<InvPtr> homology(const ChainComplex& cx) {
  std::vector<InvPtr> h;
  const std::size_t k = cx.objects.size();
  for (std::size_t n = 0; n < k; ++n) {
    // Ker(d_n) with d_0 = 0 -> zero object; Im-bar(d_{n+1}) with d_{k} = 0.
    Mask ker_mask;
    if (n == 0) {
      ker_mask.assign(static_cast<std::size_t>(cx.objects[0]->size()), true);
    } else {
      ker_mask = inv_kernel(cx.differentials[n - 1]).members;
    }
    InvQuotient q = n + 1 <= cx.differentials.size()
                        ? inv_cokernel(cx.differentials[n])
                        : inv_cokernel(inv_zero(zero_inv(), cx.objects[n]));
    Ex3Result r = ex3_subquotient(cx.objects[n], ker_mask, q.projection);
    h.push_back(r.s_sub.module);
  }
  return h;
}

}  // namespace bmod
