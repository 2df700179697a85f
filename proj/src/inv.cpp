#include "bmod/inv.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bmod/galois.hpp"
#include "bmod/radical.hpp"

namespace bmod {

InvModule::InvModule(ModulePtr base, std::vector<Idx> sigma)
    : base_(std::move(base)), sigma_(std::move(sigma)) {
  const Idx n = base_->size();
  if (sigma_.size() != static_cast<std::size_t>(n))
    throw ValidationError("Sigma", {}, "involution has wrong length");
  if (!is_morphism_map(*base_, *base_, sigma_))
    throw ValidationError("Sigma", {}, "involution is not a module endomorphism");
  for (Idx x = 0; x < n; ++x)
    if (sigma_[static_cast<std::size_t>(sigma_[static_cast<std::size_t>(x)])] != x)
      throw ValidationError("Sigma", {x}, "involution squared is not the identity");
}

Mask InvModule::fixed_mask() const {
  Mask m(static_cast<std::size_t>(size()), false);
  for (Idx x = 0; x < size(); ++x) m[static_cast<std::size_t>(x)] = is_fixed(x);
  return m;
}

bool InvModule::is_null_object() const {
  for (Idx x = 0; x < size(); ++x)
    if (!is_fixed(x)) return false;
  return true;
}

InvPtr make_inv(ModulePtr base, std::vector<Idx> sigma) {
  return std::make_shared<InvModule>(std::move(base), std::move(sigma));
}

InvPtr make_null(ModulePtr base) {
  std::vector<Idx> id(static_cast<std::size_t>(base->size()));
  std::iota(id.begin(), id.end(), 0);
  return make_inv(std::move(base), std::move(id));
}

InvPtr zero_inv() {
  static const InvPtr z = make_null(zero_module());
  return z;
}

InvMorphism::InvMorphism(InvPtr dom, InvPtr cod, std::vector<Idx> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (!is_morphism_map(*dom_->base(), *cod_->base(), map_))
    throw ValidationError("NotMorphism", {}, "map does not preserve joins and zero");
  for (Idx x = 0; x < dom_->size(); ++x)
    if (map_[static_cast<std::size_t>(dom_->sigma(x))] != cod_->sigma(map_[static_cast<std::size_t>(x)]))
      throw ValidationError("NotEquivariant", {x}, "map does not commute with the involutions");
}

bool InvMorphism::is_injective() const { return underlying().is_injective(); }
bool InvMorphism::is_surjective() const { return underlying().is_surjective(); }
Mask InvMorphism::range() const { return underlying().range(); }

InvMorphism inv_identity(const InvPtr& e) {
  std::vector<Idx> id(static_cast<std::size_t>(e->size()));
  std::iota(id.begin(), id.end(), 0);
  return InvMorphism(e, e, std::move(id));
}

InvMorphism inv_zero(const InvPtr& dom, const InvPtr& cod) {
  return InvMorphism(dom, cod, std::vector<Idx>(static_cast<std::size_t>(dom->size()), 0));
}

InvMorphism inv_compose(const InvMorphism& f, const InvMorphism& g) {
  if (!f.dom()->same_structure(*g.cod()))
    throw DomainMismatch("inv_compose: codomain of inner map differs from domain of outer map");
  std::vector<Idx> map(static_cast<std::size_t>(g.dom()->size()));
  for (Idx x = 0; x < g.dom()->size(); ++x) map[static_cast<std::size_t>(x)] = f(g(x));
  return InvMorphism(g.dom(), f.cod(), std::move(map));
}

InvMorphism inv_join(const InvMorphism& f, const InvMorphism& g) {
  if (!f.dom()->same_structure(*g.dom()) || !f.cod()->same_structure(*g.cod()))
    throw DomainMismatch("inv_join: mismatched endpoints");
  std::vector<Idx> map(static_cast<std::size_t>(f.dom()->size()));
  for (Idx x = 0; x < f.dom()->size(); ++x)
    map[static_cast<std::size_t>(x)] = f.cod()->join(f(x), g(x));
  return InvMorphism(f.dom(), f.cod(), std::move(map));
}

InvMorphism inv_sigma_post(const InvMorphism& f) {
  std::vector<Idx> map(static_cast<std::size_t>(f.dom()->size()));
  for (Idx x = 0; x < f.dom()->size(); ++x) map[static_cast<std::size_t>(x)] = f.cod()->sigma(f(x));
  return InvMorphism(f.dom(), f.cod(), std::move(map));
}

bool is_null(const InvMorphism& f) {
  for (Idx x = 0; x < f.dom()->size(); ++x)
    if (!f.cod()->is_fixed(f(x))) return false;
  return true;
}

// ---- Functors -----------------------------------------------------------------

SFunctor s_functor(const ModulePtr& m) {
  Product sq = product(m, m);
  std::vector<Idx> swap_map(static_cast<std::size_t>(sq.module->size()));
  for (Idx z = 0; z < sq.module->size(); ++z) {
    auto [x, y] = sq.unpair(z);
    swap_map[static_cast<std::size_t>(z)] = sq.pair_index(y, x);
  }
  InvPtr obj = make_inv(sq.module, std::move(swap_map));
  return SFunctor{obj, std::move(sq)};
}

InvMorphism s_of(const SFunctor& sm, const SFunctor& sn, const Morphism& f) {
  std::vector<Idx> map(static_cast<std::size_t>(sm.object->size()));
  for (Idx z = 0; z < sm.object->size(); ++z) {
    auto [x, y] = sm.unembed(z);
    map[static_cast<std::size_t>(z)] = sn.embed(f(x), f(y));
  }
  return InvMorphism(sm.object, sn.object, std::move(map));
}

ModulePtr forget(const InvPtr& e) { return e->base(); }

TFunctor t_functor(const InvPtr& e) {
  SFunctor s = s_functor(e->base());
  std::vector<Idx> unit(static_cast<std::size_t>(e->size()));
  for (Idx a = 0; a < e->size(); ++a) unit[static_cast<std::size_t>(a)] = s.embed(a, e->sigma(a));
  std::vector<Idx> retr(static_cast<std::size_t>(s.object->size()));
  for (Idx z = 0; z < s.object->size(); ++z) {
    auto [x, y] = s.unembed(z);
    retr[static_cast<std::size_t>(z)] = e->join(x, e->sigma(y));
  }
  InvPtr t = s.object;
  return TFunctor{t, s, InvMorphism(e, t, std::move(unit)), InvMorphism(t, e, std::move(retr))};
}

Morphism adjunction_pi(const SFunctor& sn, const InvMorphism& f) {
  if (!f.cod()->same_structure(*sn.object))
    throw DomainMismatch("adjunction_pi: codomain is not the given square");
  std::vector<Idx> map(static_cast<std::size_t>(f.dom()->size()));
  for (Idx x = 0; x < f.dom()->size(); ++x) map[static_cast<std::size_t>(x)] = sn.unembed(f(x)).first;
  return Morphism(f.dom()->base(), sn.square.left, std::move(map));
}

InvMorphism adjunction_pi_inv(const InvPtr& e, const SFunctor& sn, const Morphism& psi) {
  std::vector<Idx> map(static_cast<std::size_t>(e->size()));
  for (Idx x = 0; x < e->size(); ++x)
    map[static_cast<std::size_t>(x)] = sn.embed(psi(x), psi(e->sigma(x)));
  return InvMorphism(e, sn.object, std::move(map));
}

// ---- Sub-objects, kernels, quotients --------------------------------------------

Mask augment_subobject(const InvModule& e, Mask members) {
  members.resize(static_cast<std::size_t>(e.size()), false);
  members[0] = true;
  for (Idx x = 0; x < e.size(); ++x)
    if (e.is_fixed(x)) members[static_cast<std::size_t>(x)] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    auto elems = mask_to_list(members);
    for (Idx x : elems) {
      if (!members[static_cast<std::size_t>(e.sigma(x))]) {
        members[static_cast<std::size_t>(e.sigma(x))] = true;
        changed = true;
      }
      for (Idx y : elems) {
        Idx j = e.join(x, y);
        if (!members[static_cast<std::size_t>(j)]) {
          members[static_cast<std::size_t>(j)] = true;
          changed = true;
        }
      }
    }
  }
  return members;
}

InvSub inv_submodule(const InvPtr& e, const Mask& members) {
  Submodule sub = submodule(e->base(), members);
  std::vector<Idx> sigma(sub.elems.size());
  for (std::size_t i = 0; i < sub.elems.size(); ++i) {
    Idx s = e->sigma(sub.elems[i]);
    Idx in_sub = sub.index_in[static_cast<std::size_t>(s)];
    if (in_sub < 0) throw PreconditionViolated("inv_submodule: subset is not sigma-stable");
    sigma[i] = in_sub;
  }
  InvPtr mod = make_inv(sub.module, std::move(sigma));
  InvMorphism incl(mod, e, sub.elems);
  return InvSub{e, members, mod, std::move(incl), sub.elems, sub.index_in};
}

InvSub inv_kernel(const InvMorphism& h) {
  Mask members(static_cast<std::size_t>(h.dom()->size()), false);
  for (Idx x = 0; x < h.dom()->size(); ++x)
    members[static_cast<std::size_t>(x)] = h.cod()->is_fixed(h(x));
  return inv_submodule(h.dom(), members);
}

InvCongruence InvCongruence::generated(const InvPtr& e,
                                       const std::vector<std::pair<Idx, Idx>>& seeds) {
  // Close the seeds under the involution, then saturate as a join-congruence;
  // re-add sigma-images of merges until stable.
  std::vector<std::pair<Idx, Idx>> work = seeds;
  Congruence c = Congruence::discrete(e->base());
  bool stable = false;
  while (!stable) {
    c = Congruence::generated(e->base(), work);
    stable = true;
    for (Idx x = 0; x < e->size() && stable; ++x)
      for (Idx y = x + 1; y < e->size() && stable; ++y)
        if (c.class_of(x) == c.class_of(y) &&
            c.class_of(e->sigma(x)) != c.class_of(e->sigma(y))) {
          work.emplace_back(e->sigma(x), e->sigma(y));
          stable = false;
        }
  }
  return InvCongruence{std::move(c)};
}

InvQuotient inv_quotient(const InvPtr& e, const InvCongruence& c) {
  Quotient q = quotient(e->base(), c.congruence);
  const Idx k = c.congruence.class_count();
  std::vector<Idx> sigma(static_cast<std::size_t>(k), -1);
  for (Idx x = 0; x < e->size(); ++x) {
    Idx cls = c.congruence.class_of(x);
    Idx img = c.congruence.class_of(e->sigma(x));
    if (sigma[static_cast<std::size_t>(cls)] >= 0 && sigma[static_cast<std::size_t>(cls)] != img)
      throw Error("inv_quotient: congruence is not sigma-compatible");
    sigma[static_cast<std::size_t>(cls)] = img;
  }
  InvPtr obj = make_inv(q.module, std::move(sigma));
  return InvQuotient{obj, InvMorphism(e, obj, q.projection.map())};
}

namespace {

// The explicit cokernel description: carrier = fixed points plus the
// complement of E, quotient only on the complement.  Used as a cross-check of
// the congruence construction.
void check_explicit_cokernel(const InvPtr& f, const Mask& e_members, const InvQuotient& coker) {
  const InvModule& F = *f;
  const Idx n = F.size();
  std::vector<Idx> rep(static_cast<std::size_t>(n));  // element -> chosen carrier element
  for (Idx x = 0; x < n; ++x)
    rep[static_cast<std::size_t>(x)] = e_members[static_cast<std::size_t>(x)] ? F.p(x) : x;
  // Union-find on the carrier under rule: xi notin E, p(u)=p(v), u,v in E =>
  // xi+u ~ xi+v.
  std::vector<Idx> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Idx x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](Idx a, Idx b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  auto elems_e = mask_to_list(e_members);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Idx xi = 0; xi < n; ++xi) {
      if (e_members[static_cast<std::size_t>(xi)]) continue;
      for (Idx u : elems_e)
        for (Idx v : elems_e) {
          if (F.p(u) != F.p(v)) continue;
          Idx a = rep[static_cast<std::size_t>(F.join(xi, u))];
          Idx b = rep[static_cast<std::size_t>(F.join(xi, v))];
          if (find(a) != find(b)) {
            unite(a, b);
            changed = true;
          }
        }
    }
  }
  // Compare class structure: x ~ y in the explicit description iff the
  // projected representatives merge.
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y) {
      bool explicit_same = find(rep[static_cast<std::size_t>(x)]) == find(rep[static_cast<std::size_t>(y)]);
      bool cong_same = coker.projection(x) == coker.projection(y);
      if (explicit_same != cong_same)
        throw Error("inv_cokernel: congruence and explicit descriptions disagree");
    }
}

}  // namespace

InvQuotient inv_cokernel_of_subset(const InvPtr& e, const Mask& members) {
  Mask aug = augment_subobject(*e, members);
  std::vector<std::pair<Idx, Idx>> seeds;
  for (Idx u = 0; u < e->size(); ++u)
    if (aug[static_cast<std::size_t>(u)]) seeds.emplace_back(u, e->sigma(u));
  InvQuotient q = inv_quotient(e, InvCongruence::generated(e, seeds));
  check_explicit_cokernel(e, aug, q);
  return q;
}

InvQuotient inv_cokernel(const InvMorphism& h) {
  return inv_cokernel_of_subset(h.cod(), h.range());
}

InvQuotient inv_coequalizer(const InvMorphism& f, const InvMorphism& g) {
  if (!f.dom()->same_structure(*g.dom()) || !f.cod()->same_structure(*g.cod()))
    throw DomainMismatch("inv_coequalizer: maps are not parallel");
  std::vector<std::pair<Idx, Idx>> seeds;
  for (Idx x = 0; x < f.dom()->size(); ++x) seeds.emplace_back(f(x), g(x));
  return inv_quotient(f.cod(), InvCongruence::generated(f.cod(), seeds));
}

namespace {

struct InvProduct {
  InvPtr object;
  Product square;
};

InvProduct inv_product(const InvPtr& a, const InvPtr& b) {
  Product sq = product(a->base(), b->base());
  std::vector<Idx> sigma(static_cast<std::size_t>(sq.module->size()));
  for (Idx z = 0; z < sq.module->size(); ++z) {
    auto [x, y] = sq.unpair(z);
    sigma[static_cast<std::size_t>(z)] = sq.pair_index(a->sigma(x), b->sigma(y));
  }
  return InvProduct{make_inv(sq.module, std::move(sigma)), std::move(sq)};
}

}  // namespace

PushoutResult pushout(const InvMorphism& f, const InvMorphism& h) {
  if (!f.dom()->same_structure(*h.dom()))
    throw DomainMismatch("pushout: the morphisms must share their domain");
  InvProduct fz = inv_product(f.cod(), h.cod());
  std::vector<std::pair<Idx, Idx>> seeds;
  for (Idx x = 0; x < f.dom()->size(); ++x)
    seeds.emplace_back(fz.square.pair_index(f(x), 0), fz.square.pair_index(0, h(x)));
  InvQuotient q = inv_quotient(fz.object, InvCongruence::generated(fz.object, seeds));
  std::vector<Idx> mf(static_cast<std::size_t>(f.cod()->size()));
  for (Idx u = 0; u < f.cod()->size(); ++u)
    mf[static_cast<std::size_t>(u)] = q.projection(fz.square.pair_index(u, 0));
  std::vector<Idx> mh(static_cast<std::size_t>(h.cod()->size()));
  for (Idx v = 0; v < h.cod()->size(); ++v)
    mh[static_cast<std::size_t>(v)] = q.projection(fz.square.pair_index(0, v));
  return PushoutResult{q.object, InvMorphism(f.cod(), q.object, std::move(mf)),
                       InvMorphism(h.cod(), q.object, std::move(mh))};
}

FixedCokerIso fixed_coker_iso(const InvPtr& e, const Mask& members) {
  for (Idx x = 0; x < e->size(); ++x)
    if (e->is_fixed(x) && !members[static_cast<std::size_t>(x)])
      throw PreconditionViolated("fixed_coker_iso: subobject must contain the fixed points");
  InvQuotient q = inv_cokernel_of_subset(e, members);
  const InvModule& c = *q.object;
  // cok restricted to fixed points, and cok(Id) = p back.
  std::map<Idx, Idx> to;
  for (Idx x = 0; x < e->size(); ++x)
    if (e->is_fixed(x)) to[x] = q.projection(x);
  std::map<Idx, Idx> back;
  for (Idx x = 0; x < e->size(); ++x) {
    Idx cls = q.projection(x);
    if (!c.is_fixed(cls)) continue;
    // the inverse map sends the class to p of any representative
    Idx v = e->p(x);
    auto [it, fresh] = back.emplace(cls, v);
    if (!fresh && it->second != v)
      throw Error("fixed_coker_iso: projection is not constant on classes");
  }
  if (to.size() != back.size())
    throw Error("fixed_coker_iso: fixed points and fixed classes differ in number");
  FixedCokerIso iso;
  for (auto [x, cls] : to) {
    iso.to_coker.push_back(cls);
    if (back.at(cls) != x) throw Error("fixed_coker_iso: the two maps do not compose to the identity");
  }
  for (auto [cls, x] : back) iso.from_coker.push_back(x);
  return iso;
}

// ---- Duality ---------------------------------------------------------------------

namespace {

ModulePtr opposite_module(const ModulePtr& m) {
  const Idx n = m->size();
  const Idx t = m->top();
  // Reindex so that the old top becomes the new zero: swap 0 and top.
  std::vector<Idx> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[static_cast<std::size_t>(t)]);
  std::vector<Idx> inv(static_cast<std::size_t>(n));
  for (Idx i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  std::vector<std::string> names(static_cast<std::size_t>(n));
  std::vector<Idx> table(static_cast<std::size_t>(n) * n);
  for (Idx i = 0; i < n; ++i) {
    names[static_cast<std::size_t>(i)] =
        "[0," + m->name(perm[static_cast<std::size_t>(i)]) + "]";
    for (Idx j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = inv[static_cast<std::size_t>(
          m->meet(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))];
  }
  return BModule::make(std::move(names), std::move(table));
}

}  // namespace

InvDual dual_inv(const InvPtr& e) {
  const Idx n = e->size();
  const Idx t = e->base()->top();
  std::vector<Idx> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[static_cast<std::size_t>(t)]);
  std::vector<Idx> inv(static_cast<std::size_t>(n));
  for (Idx i = 0; i < n; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  ModulePtr op = opposite_module(e->base());
  std::vector<Idx> sigma(static_cast<std::size_t>(n));
  for (Idx i = 0; i < n; ++i)
    sigma[static_cast<std::size_t>(i)] =
        inv[static_cast<std::size_t>(e->sigma(perm[static_cast<std::size_t>(i)]))];
  return InvDual{make_inv(op, std::move(sigma))};
}

bool pairing_null(const InvModule& e, Idx x, Idx u) {
  return e.leq(x, u) == e.leq(e.sigma(x), u);
}

Mask orthogonal(const InvPtr& e, const Mask& members) {
  // Dual carrier reuses the reindexing of dual_inv: dual element i corresponds
  // to the functional vanishing on [0, perm(i)].
  const Idx n = e->size();
  const Idx t = e->base()->top();
  std::vector<Idx> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[static_cast<std::size_t>(t)]);
  Mask out(static_cast<std::size_t>(n), false);
  for (Idx i = 0; i < n; ++i) {
    Idx u = perm[static_cast<std::size_t>(i)];
    bool ok = true;
    for (Idx x = 0; x < n && ok; ++x)
      if (members[static_cast<std::size_t>(x)] && !pairing_null(*e, x, u)) ok = false;
    out[static_cast<std::size_t>(i)] = ok;
  }
  return out;
}

InvMorphism dual_of_inv_morphism(const InvMorphism& f) {
  InvDual de = dual_inv(f.dom());
  InvDual df = dual_inv(f.cod());
  const Idx ne = f.dom()->size(), nf = f.cod()->size();
  const Idx te = f.dom()->base()->top(), tf = f.cod()->base()->top();
  auto perm_of = [](Idx n, Idx t) {
    std::vector<Idx> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[static_cast<std::size_t>(t)]);
    return perm;
  };
  std::vector<Idx> pe = perm_of(ne, te), pf = perm_of(nf, tf);
  std::vector<Idx> inv_pe(static_cast<std::size_t>(ne));
  for (Idx i = 0; i < ne; ++i) inv_pe[static_cast<std::size_t>(pe[static_cast<std::size_t>(i)])] = i;
  std::vector<Idx> g = galois_adjoint(f.underlying());
  std::vector<Idx> map(static_cast<std::size_t>(nf));
  for (Idx i = 0; i < nf; ++i) {
    Idx u = pf[static_cast<std::size_t>(i)];
    map[static_cast<std::size_t>(i)] = inv_pe[static_cast<std::size_t>(g[static_cast<std::size_t>(u)])];
  }
  return InvMorphism(df.object, de.object, std::move(map));
}

// ---- Hom enumeration ----------------------------------------------------------------

namespace {

std::vector<Idx> ordered_irreducibles_of(const BModule& m) {
  std::vector<Idx> irr = m.join_irreducibles();
  std::stable_sort(irr.begin(), irr.end(), [&](Idx a, Idx b) {
    Idx da = 0, db = 0;
    for (Idx y = 0; y < m.size(); ++y) {
      if (m.leq(y, a)) ++da;
      if (m.leq(y, b)) ++db;
    }
    return std::tie(da, a) < std::tie(db, b);
  });
  return irr;
}

struct InvHomSearch {
  const InvModule& dom;
  const InvModule& cod;
  const SearchLimits& limits;
  std::vector<Idx> irr;
  std::vector<Idx> pos_of;  // domain element -> position among irreducibles or -1
  std::vector<Idx> value;
  std::uint64_t states = 0;
  std::vector<std::vector<Idx>> found;

  void run() {
    irr = ordered_irreducibles_of(*dom.base());
    pos_of.assign(static_cast<std::size_t>(dom.size()), -1);
    for (std::size_t i = 0; i < irr.size(); ++i) pos_of[static_cast<std::size_t>(irr[i])] = static_cast<Idx>(i);
    value.assign(irr.size(), -1);
    descend(0);
  }

  void descend(std::size_t i) {
    if (++states > limits.max_states)
      throw LimitExceeded("inv_hom_set: search frontier exceeded the configured bound");
    if (i == irr.size()) {
      emit();
      return;
    }
    // The image of sigma(g) forces the image of g when already assigned.
    Idx sg = dom.sigma(irr[i]);
    Idx forced = -1;
    if (Idx j = pos_of[static_cast<std::size_t>(sg)]; j >= 0 && j < static_cast<Idx>(i))
      forced = cod.sigma(value[static_cast<std::size_t>(j)]);
    for (Idx v = 0; v < cod.size(); ++v) {
      if (forced >= 0 && v != forced) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (dom.leq(irr[j], irr[i]) && !cod.leq(value[j], v)) ok = false;
        if (dom.leq(irr[i], irr[j]) && !cod.leq(v, value[j])) ok = false;
      }
      if (!ok) continue;
      value[i] = v;
      descend(i + 1);
      value[i] = -1;
    }
  }

  void emit() {
    std::vector<Idx> map(static_cast<std::size_t>(dom.size()));
    for (Idx x = 0; x < dom.size(); ++x) {
      Idx v = 0;
      for (std::size_t j = 0; j < irr.size(); ++j)
        if (dom.leq(irr[j], x)) v = cod.join(v, value[j]);
      map[static_cast<std::size_t>(x)] = v;
    }
    if (!is_morphism_map(*dom.base(), *cod.base(), map)) return;
    for (Idx x = 0; x < dom.size(); ++x)
      if (map[static_cast<std::size_t>(dom.sigma(x))] != cod.sigma(map[static_cast<std::size_t>(x)]))
        return;
    found.push_back(std::move(map));
  }
};

}  // namespace

std::vector<InvMorphism> inv_hom_set(const InvPtr& dom, const InvPtr& cod,
                                     const SearchLimits& limits) {
  InvHomSearch search{*dom, *cod, limits, {}, {}, {}, 0, {}};
  search.run();
  std::sort(search.found.begin(), search.found.end());
  search.found.erase(std::unique(search.found.begin(), search.found.end()), search.found.end());
  std::vector<InvMorphism> out;
  out.reserve(search.found.size());
  for (auto& map : search.found) out.emplace_back(dom, cod, std::move(map));
  return out;
}

std::vector<InvMorphism> inv_automorphisms(const InvPtr& e, const SearchLimits& limits) {
  std::vector<InvMorphism> out;
  for (const InvMorphism& f : inv_hom_set(e, e, limits))
    if (f.is_injective() && f.is_surjective()) out.push_back(f);
  return out;
}

std::optional<std::vector<Idx>> find_inv_isomorphism(const InvPtr& e, const InvPtr& f) {
  if (e->size() != f->size()) return std::nullopt;
  // Reuse the plain search but demand equivariance on top.
  auto base_iso = find_isomorphism(e->base(), f->base());
  if (!base_iso) return std::nullopt;
  for (const InvMorphism& h : inv_hom_set(e, f))
    if (h.is_injective() && h.is_surjective()) return h.map();
  return std::nullopt;
}

bool inv_isomorphic(const InvPtr& e, const InvPtr& f) { return find_inv_isomorphism(e, f).has_value(); }

Idx HomObject::index_of(const std::vector<Idx>& map) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), map,
                             [](const InvMorphism& h, const std::vector<Idx>& m) { return h.map() < m; });
  if (it == elements.end() || !(it->map() == map))
    throw Error("hom_object: morphism not found in the element list");
  return static_cast<Idx>(it - elements.begin());
}

HomObject hom_object(const InvPtr& l, const InvPtr& m, const SearchLimits& limits) {
  std::vector<InvMorphism> elems = inv_hom_set(l, m, limits);
  const Idx k = static_cast<Idx>(elems.size());
  std::vector<std::vector<Idx>> maps;
  maps.reserve(elems.size());
  for (const auto& h : elems) maps.push_back(h.map());
  auto index_of = [&](const std::vector<Idx>& map) {
    auto it = std::lower_bound(maps.begin(), maps.end(), map);
    if (it == maps.end() || *it != map) throw Error("hom_object: join escaped the hom set");
    return static_cast<Idx>(it - maps.begin());
  };
  std::vector<std::string> names(static_cast<std::size_t>(k));
  std::vector<Idx> table(static_cast<std::size_t>(k) * k);
  std::vector<Idx> sigma(static_cast<std::size_t>(k));
  for (Idx i = 0; i < k; ++i) {
    std::string nm = "h" + std::to_string(i);
    names[static_cast<std::size_t>(i)] = nm;
    std::vector<Idx> si(static_cast<std::size_t>(l->size()));
    for (Idx x = 0; x < l->size(); ++x)
      si[static_cast<std::size_t>(x)] = m->sigma(maps[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]);
    sigma[static_cast<std::size_t>(i)] = index_of(si);
    for (Idx j = 0; j < k; ++j) {
      std::vector<Idx> jm(static_cast<std::size_t>(l->size()));
      for (Idx x = 0; x < l->size(); ++x)
        jm[static_cast<std::size_t>(x)] = m->join(maps[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)],
                                                  maps[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)]);
      table[static_cast<std::size_t>(i) * k + j] = index_of(jm);
    }
  }
  InvPtr obj = make_inv(BModule::make(std::move(names), std::move(table)), std::move(sigma));
  return HomObject{obj, l, m, std::move(elems)};
}

// ---- Sigma-injectivity ---------------------------------------------------------------

bool sigma_injective(const InvMorphism& f) {
  const InvModule& e = *f.dom();
  for (Idx x = 0; x < e.size(); ++x)
    for (Idx y = x + 1; y < e.size(); ++y)
      if (e.p(x) == e.p(y) && f(x) == f(y)) return false;
  return true;
}

bool kernel_is_null(const InvMorphism& f) {
  for (Idx x = 0; x < f.dom()->size(); ++x)
    if (f.cod()->is_fixed(f(x)) && !f.dom()->is_fixed(x)) return false;
  return true;
}

KernelNullReport kernel_null_tests(const InvPtr& e, const std::vector<InvPtr>& codomains,
                                   const SearchLimits& limits) {
  KernelNullReport rep;
  rep.dual_min_generated = dual_min_generated(e->base());
  rep.fiberwise_hypothesis = true;
  {
    // For each fiber F of p, the module {0} u F must have a dual generated by
    // its minimal elements.
    std::map<Idx, std::vector<Idx>> fibers;
    for (Idx x = 0; x < e->size(); ++x) fibers[e->p(x)].push_back(x);
    for (auto& [val, fiber] : fibers) {
      Mask members(static_cast<std::size_t>(e->size()), false);
      members[0] = true;
      for (Idx x : fiber) members[static_cast<std::size_t>(x)] = true;
      Mask closed = join_closure(*e->base(), members);
      if (closed != members) continue;  // fiber with 0 is not a submodule; skip
      Submodule sub = submodule(e->base(), members);
      if (!dual_min_generated(sub.module)) rep.fiberwise_hypothesis = false;
    }
  }
  for (const InvPtr& x : codomains) {
    for (const InvMorphism& f : inv_hom_set(e, x, limits)) {
      ++rep.morphisms_checked;
      bool knull = kernel_is_null(f);
      bool sinj = sigma_injective(f);
      if (sinj && !knull) {
        rep.equivalence_holds = false;
        rep.failure = "sigma-injective morphism with non-null kernel";
      }
      if ((rep.dual_min_generated || rep.fiberwise_hypothesis) && knull && !sinj) {
        rep.equivalence_holds = false;
        rep.failure = "null kernel without sigma-injectivity under the stated hypothesis";
      }
      if (knull) {
        for (Idx a = 0; a < e->size() && rep.strong_implication_holds; ++a)
          for (Idx b = 0; b < e->size(); ++b)
            if (!e->is_fixed(e->join(a, e->sigma(b))) && f(a) == f(b) && a != b) {
              rep.strong_implication_holds = false;
              rep.failure = "null kernel failed to separate a non-null x + sigma(y)";
              break;
            }
      }
    }
  }
  return rep;
}

bool is_injective_obj(const InvPtr& e) { return is_injective_finite(e->base()); }
bool is_projective_obj(const InvPtr& e) { return is_injective_finite(e->base()); }

}  // namespace bmod
