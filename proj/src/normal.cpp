#include "bmod/normal.hpp"

#include <algorithm>
#include <numeric>

namespace bmod {

namespace {

// Connectivity route for one element: xi lies in the normal image iff, in the
// graph on E with edges a--b when p(a)=p(b) or a+xi=b+xi, some a with
// a+xi=xi reaches some b with p(b)=p(xi).  `max_rounds` < 0 means unbounded;
// otherwise the number of p-steps is capped (giving the filtration levels).
bool filtration_reaches(const InvModule& F, const std::vector<Idx>& e_elems, Idx xi,
                        Idx max_rounds) {
  std::vector<Idx> start;
  for (Idx a : e_elems)
    if (F.join(a, xi) == xi) start.push_back(a);
  if (start.empty()) return false;
  auto is_end = [&](Idx a) { return F.p(a) == F.p(xi); };
  // Alternate closures: within a round, expand along a+xi=b+xi edges, then
  // along p(a)=p(b) edges.
  std::vector<bool> reach(static_cast<std::size_t>(F.size()), false);
  for (Idx a : start) reach[static_cast<std::size_t>(a)] = true;
  auto expand_xi = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (Idx a : e_elems) {
        if (!reach[static_cast<std::size_t>(a)]) continue;
        for (Idx b : e_elems)
          if (!reach[static_cast<std::size_t>(b)] && F.join(a, xi) == F.join(b, xi)) {
            reach[static_cast<std::size_t>(b)] = true;
            grew = true;
          }
      }
    }
  };
  auto expand_p = [&]() {
    bool grew = false;
    for (Idx a : e_elems) {
      if (!reach[static_cast<std::size_t>(a)]) continue;
      for (Idx b : e_elems)
        if (!reach[static_cast<std::size_t>(b)] && F.p(a) == F.p(b)) {
          reach[static_cast<std::size_t>(b)] = true;
          grew = true;
        }
    }
    return grew;
  };
  Idx rounds = 0;
  for (;;) {
    for (Idx a : e_elems)
      if (reach[static_cast<std::size_t>(a)] && is_end(a)) return true;
    if (max_rounds >= 0 && rounds >= max_rounds) return false;
    expand_xi();
    bool grew = expand_p();
    expand_xi();
    ++rounds;
    if (!grew && rounds > F.size()) return false;
  }
}

}  // namespace

Mask normal_image_filtration(const InvPtr& f, const Mask& members) {
  Mask e = augment_subobject(*f, members);
  auto elems = mask_to_list(e);
  Mask out(static_cast<std::size_t>(f->size()), false);
  for (Idx xi = 0; xi < f->size(); ++xi)
    out[static_cast<std::size_t>(xi)] =
        e[static_cast<std::size_t>(xi)] || filtration_reaches(*f, elems, xi, -1);
  return out;
}

Idx normal_image_level(const InvPtr& f, const Mask& members, Idx xi) {
  Mask e = augment_subobject(*f, members);
  auto elems = mask_to_list(e);
  for (Idx rounds = 0; rounds <= f->size() + 1; ++rounds)
    if (filtration_reaches(*f, elems, xi, rounds)) return rounds + 1;  // Im^(1) uses 0 p-steps
  return 0;
}

Mask normal_image_biorthogonal(const InvPtr& f, const Mask& members) {
  Mask e = augment_subobject(*f, members);
  // E-perp inside the dual: functionals phi_u with pairing null on E.
  const Idx n = f->size();
  std::vector<Idx> perp;
  for (Idx u = 0; u < n; ++u) {
    bool ok = true;
    for (Idx x = 0; x < n && ok; ++x)
      if (e[static_cast<std::size_t>(x)] && !pairing_null(*f, x, u)) ok = false;
    if (ok) perp.push_back(u);
  }
  Mask out(static_cast<std::size_t>(n), false);
  for (Idx x = 0; x < n; ++x) {
    bool ok = true;
    for (Idx u : perp)
      if (!pairing_null(*f, x, u)) {
        ok = false;
        break;
      }
    out[static_cast<std::size_t>(x)] = ok;
  }
  return out;
}

Mask normal_image_cokernel(const InvPtr& f, const Mask& members) {
  InvQuotient q = inv_cokernel_of_subset(f, members);
  Mask out(static_cast<std::size_t>(f->size()), false);
  for (Idx x = 0; x < f->size(); ++x)
    out[static_cast<std::size_t>(x)] = q.object->is_fixed(q.projection(x));
  return out;
}

Mask normal_image(const InvPtr& f, const Mask& members) {
  Mask a = normal_image_filtration(f, members);
  Mask b = normal_image_biorthogonal(f, members);
  Mask c = normal_image_cokernel(f, members);
  if (a != b || a != c) throw Error("normal_image: the three algorithms disagree");
  return a;
}

bool is_normal_subobject(const InvPtr& f, const Mask& members) {
  Mask aug = augment_subobject(*f, members);
  return normal_image(f, aug) == aug;
}

Mask normal_image_of_morphism(const InvMorphism& h) {
  return normal_image(h.cod(), h.range());
}

Exactness exactness(const InvMorphism& f, const InvMorphism& g) {
  if (!f.cod()->same_structure(*g.dom()))
    throw DomainMismatch("exactness: sequence is not composable");
  Exactness res;
  res.order_two = true;
  for (Idx x = 0; x < f.dom()->size(); ++x)
    if (!g.cod()->is_fixed(g(f(x)))) res.order_two = false;
  const InvPtr& m = f.cod();
  Mask range_plus(static_cast<std::size_t>(m->size()), false);
  for (Idx x = 0; x < f.dom()->size(); ++x)
    for (Idx s = 0; s < m->size(); ++s)
      if (m->is_fixed(s)) range_plus[static_cast<std::size_t>(m->join(f(x), s))] = true;
  Mask ker(static_cast<std::size_t>(m->size()), false);
  for (Idx x = 0; x < m->size(); ++x)
    ker[static_cast<std::size_t>(x)] = g.cod()->is_fixed(g(x));
  res.strict = (range_plus == ker);
  res.exact = (normal_image_of_morphism(f) == ker);
  if (res.strict && !res.exact) throw Error("exactness: strict exactness failed to imply exactness");
  return res;
}

Idx NsbLattice::index_of(const Mask& m) const {
  auto it = std::lower_bound(members.begin(), members.end(), m, mask_less);
  if (it == members.end() || *it != m) throw Error("nsb: subobject not in the lattice");
  return static_cast<Idx>(it - members.begin());
}

Idx NsbLattice::meet(Idx a, Idx b) const {
  Mask m(members[static_cast<std::size_t>(a)].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = members[static_cast<std::size_t>(a)][i] && members[static_cast<std::size_t>(b)][i];
  return index_of(m);
}

Idx NsbLattice::join(Idx a, Idx b) const {
  Mask m(members[static_cast<std::size_t>(a)].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = members[static_cast<std::size_t>(a)][i] || members[static_cast<std::size_t>(b)][i];
  return index_of(normal_image(owner, join_closure(*owner->base(), m)));
}

bool NsbLattice::leq(Idx a, Idx b) const {
  for (std::size_t i = 0; i < members[static_cast<std::size_t>(a)].size(); ++i)
    if (members[static_cast<std::size_t>(a)][i] && !members[static_cast<std::size_t>(b)][i]) return false;
  return true;
}

NsbLattice nsb(const InvPtr& e, const SearchLimits& limits) {
  const Idx n = e->size();
  // Candidate subobjects: sigma-stable join-closed subsets containing the
  // fixed points; enumerate over orbits of the non-fixed elements.
  std::vector<Idx> orbit_reps;
  for (Idx x = 0; x < n; ++x)
    if (!e->is_fixed(x) && x < e->sigma(x)) orbit_reps.push_back(x);
  if (orbit_reps.size() > 62) throw LimitExceeded("nsb: too many sigma-orbits");
  std::vector<Mask> found;
  std::uint64_t states = 0;
  for (std::uint64_t bits = 0; bits < (1ull << orbit_reps.size()); ++bits) {
    if (++states > limits.max_states) throw LimitExceeded("nsb: candidate count exceeds the bound");
    Mask m = e->fixed_mask();
    m[0] = true;
    for (std::size_t i = 0; i < orbit_reps.size(); ++i)
      if (bits & (1ull << i)) {
        m[static_cast<std::size_t>(orbit_reps[i])] = true;
        m[static_cast<std::size_t>(e->sigma(orbit_reps[i]))] = true;
      }
    // Must be join-closed already (otherwise it is not this subset).
    if (join_closure(*e->base(), m) != m) continue;
    if (normal_image(e, m) != m) continue;
    found.push_back(std::move(m));
  }
  std::sort(found.begin(), found.end(), mask_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return NsbLattice{e, std::move(found)};
}

std::optional<ModularityWitness> modularity_failure(const NsbLattice& l) {
  const Idx k = static_cast<Idx>(l.members.size());
  for (Idx e = 0; e < k; ++e)
    for (Idx g = 0; g < k; ++g) {
      if (!l.leq(e, g)) continue;
      for (Idx f = 0; f < k; ++f)
        if (l.meet(l.join(e, f), g) != l.join(e, l.meet(f, g)))
          return ModularityWitness{e, f, g};
    }
  return std::nullopt;
}

Mask direct_image(const InvMorphism& f, const Mask& m) {
  Mask img(static_cast<std::size_t>(f.cod()->size()), false);
  for (Idx x = 0; x < f.dom()->size(); ++x)
    if (m[static_cast<std::size_t>(x)]) img[static_cast<std::size_t>(f(x))] = true;
  return normal_image(f.cod(), img);
}

Mask inverse_image(const InvMorphism& f, const Mask& m) {
  Mask out(static_cast<std::size_t>(f.dom()->size()), false);
  for (Idx x = 0; x < f.dom()->size(); ++x)
    out[static_cast<std::size_t>(x)] = m[static_cast<std::size_t>(f(x))];
  return out;
}

bool is_normal_epi(const InvMorphism& q) {
  if (!q.is_surjective()) return false;
  // q must be the cokernel of its kernel: the cokernel congruence of Ker(q)
  // must have exactly the fibers of q.
  InvSub ker = inv_kernel(q);
  InvQuotient coker = inv_cokernel_of_subset(q.dom(), ker.members);
  for (Idx x = 0; x < q.dom()->size(); ++x)
    for (Idx y = 0; y < q.dom()->size(); ++y)
      if ((q(x) == q(y)) != (coker.projection(x) == coker.projection(y))) return false;
  return true;
}

bool is_normal_mono(const InvMorphism& m) {
  if (!m.is_injective()) return false;
  return is_normal_subobject(m.cod(), m.range());
}

bool is_exact_morphism(const InvMorphism& f) {
  InvSub ker = inv_kernel(f);
  InvQuotient coim = inv_cokernel_of_subset(f.dom(), ker.members);
  Mask im = normal_image_of_morphism(f);
  InvSub im_sub = inv_submodule(f.cod(), im);
  // The induced map Coim -> Im-bar: class of x -> f(x); exact iff well-defined
  // and bijective.
  std::vector<Idx> val(static_cast<std::size_t>(coim.object->size()), -1);
  for (Idx x = 0; x < f.dom()->size(); ++x) {
    Idx cls = coim.projection(x);
    Idx v = im_sub.index_in[static_cast<std::size_t>(f(x))];
    if (val[static_cast<std::size_t>(cls)] >= 0 && val[static_cast<std::size_t>(cls)] != v) return false;
    val[static_cast<std::size_t>(cls)] = v;
  }
  std::vector<bool> hit(static_cast<std::size_t>(im_sub.module->size()), false);
  for (Idx v : val) {
    if (v < 0) return false;
    if (hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Ex3Result ex3_subquotient(const InvPtr& n, const Mask& m_members, const InvMorphism& q) {
  if (!q.dom()->same_structure(*n)) throw DomainMismatch("ex3_subquotient: q must start at N");
  if (!is_normal_subobject(n, m_members))
    throw PreconditionViolated("ex3_subquotient: M is not a normal subobject");
  if (!is_normal_epi(q)) throw PreconditionViolated("ex3_subquotient: q is not a normal epi");
  InvSub ker = inv_kernel(q);
  for (Idx x = 0; x < n->size(); ++x)
    if (ker.members[static_cast<std::size_t>(x)] && !m_members[static_cast<std::size_t>(x)])
      throw PreconditionViolated("ex3_subquotient: M does not contain Ker(q)");
  InvSub m_sub = inv_submodule(n, m_members);
  Mask s_members(static_cast<std::size_t>(q.cod()->size()), false);
  for (Idx x = 0; x < n->size(); ++x)
    if (m_members[static_cast<std::size_t>(x)]) s_members[static_cast<std::size_t>(q(x))] = true;
  InvSub s_sub = inv_submodule(q.cod(), s_members);
  std::vector<Idx> qp(m_sub.elems.size());
  for (std::size_t i = 0; i < m_sub.elems.size(); ++i)
    qp[i] = s_sub.index_in[static_cast<std::size_t>(q(m_sub.elems[i]))];
  InvMorphism qprime(m_sub.module, s_sub.module, std::move(qp));
  // The factorization must verify the subquotient axiom.
  if (!is_normal_subobject(q.cod(), s_members))
    throw Error("ex3_subquotient: the image subobject is not normal");
  if (!is_normal_epi(qprime)) throw Error("ex3_subquotient: induced map is not a normal epi");
  return Ex3Result{std::move(m_sub), std::move(s_sub), std::move(qprime)};
}

}  // namespace bmod
