#include "doctest.h"

#include <algorithm>
#include <set>

#include "bmod/build.hpp"
#include "bmod/galois.hpp"
#include "bmod/normal.hpp"
#include "bmod/radical.hpp"

using namespace bmod;

namespace {

// sM = B^2 with elements {0, l, m, n}: l = (1,0) = index 1? boolean_module(2)
// uses bitmask indices: 0=0, 1=a, 2=b, 3=ab.  We take l = a(1), m = b(2), n = ab(3).
InvPtr excok_f() { return s_functor(build::boolean_module(2)).object; }

std::vector<InvPtr> small_inv_modules() {
  std::vector<InvPtr> out;
  out.push_back(make_null(build::bool_b()));
  out.push_back(s_functor(build::bool_b()).object);
  out.push_back(make_null(build::chain(3)));
  out.push_back(s_functor(build::chain(2)).object);
  // B^2 with the letter-swap involution
  out.push_back(make_inv(build::boolean_module(2), {0, 2, 1, 3}));
  return out;
}

}  // namespace

TEST_CASE("s functor, unit, retraction and the adjunction") {
  SFunctor sb = s_functor(build::bool_b());
  CHECK(sb.object->size() == 4);
  CHECK(mask_count(sb.object->fixed_mask()) == 2);
  for (const InvPtr& e : small_inv_modules()) {
    TFunctor t = t_functor(e);
    // r o eta = id
    CHECK(inv_compose(t.retraction, t.unit) == inv_identity(e));
    // pi is a bijection Hom_s(E, sN) -> Hom_B(I E, N) for small N
    for (const ModulePtr& n : {build::bool_b(), build::chain(3)}) {
      SFunctor sn = s_functor(n);
      auto shoms = inv_hom_set(e, sn.object);
      auto bhoms = hom_set(e->base(), n);
      CHECK(shoms.size() == bhoms.size());
      std::set<std::vector<Idx>> images;
      for (const InvMorphism& f : shoms) {
        Morphism pi = adjunction_pi(sn, f);
        images.insert(pi.map());
        // round trip
        CHECK(adjunction_pi_inv(e, sn, pi) == f);
      }
      CHECK(images.size() == shoms.size());
    }
  }
}

TEST_CASE("null morphisms form a closed ideal factoring through p") {
  for (const InvPtr& e : small_inv_modules()) {
    CHECK(is_null(inv_zero(e, e)));
    // p : E -> E is null
    std::vector<Idx> pmap(static_cast<std::size_t>(e->size()));
    for (Idx x = 0; x < e->size(); ++x) pmap[static_cast<std::size_t>(x)] = e->p(x);
    InvMorphism p(e, e, std::move(pmap));
    CHECK(is_null(p));
    CHECK(is_null(inv_identity(e)) == e->is_null_object());
    for (const InvPtr& f : small_inv_modules())
      for (const InvMorphism& h : inv_hom_set(e, f)) {
        if (!is_null(h)) continue;
        // null morphisms compose to null on either side
        for (const InvMorphism& g : inv_hom_set(f, f)) CHECK(is_null(inv_compose(g, h)));
        for (const InvMorphism& g : inv_hom_set(e, e)) CHECK(is_null(inv_compose(h, g)));
        // h factors through p : E -> E^sigma
        for (Idx x = 0; x < e->size(); ++x) CHECK(h(x) == h(e->p(x)));
      }
  }
}

TEST_CASE("kernel of an injective morphism is the null part") {
  for (const InvPtr& e : small_inv_modules()) {
    InvSub k = inv_kernel(inv_identity(e));
    CHECK(k.members == e->fixed_mask());
  }
}

TEST_CASE("cokernel of the identity is the projection on fixed points") {
  for (const InvPtr& e : small_inv_modules()) {
    InvQuotient q = inv_cokernel(inv_identity(e));
    CHECK(q.object->is_null_object());
    CHECK(static_cast<std::size_t>(q.object->size()) == mask_count(e->fixed_mask()));
    for (Idx x = 0; x < e->size(); ++x) CHECK(q.projection(x) == q.projection(e->p(x)));
  }
}

TEST_CASE("Example excok: the cokernel adjoins three elements to N") {
  InvPtr f = excok_f();  // sM, M = B^2 = {0,l,m,n}
  // E = s(N) + diagonal, N = {0,m,n}: the range of s(iota) plus fixed points.
  SFunctor sm = s_functor(build::boolean_module(2));
  Mask members(static_cast<std::size_t>(f->size()), false);
  for (Idx x : {0, 2, 3})
    for (Idx y : {0, 2, 3}) members[static_cast<std::size_t>(sm.embed(x, y))] = true;
  InvQuotient q = inv_cokernel_of_subset(f, members);
  CHECK(q.object->size() == 6);
  // three non-null classes: alpha = class of (l,0), sigma(alpha), alpha+sigma(alpha)
  Idx alpha = q.projection(sm.embed(1, 0));
  Idx salpha = q.projection(sm.embed(0, 1));
  CHECK(alpha != salpha);
  CHECK(q.object->sigma(alpha) == salpha);
  Idx top2 = q.projection(sm.embed(1, 1));
  CHECK(top2 == q.object->join(alpha, salpha));
  CHECK_FALSE(q.object->is_fixed(alpha));
  // alpha + z = n for z != 0 in N
  Idx ncls = q.projection(sm.embed(3, 3));
  CHECK(q.object->join(alpha, q.projection(sm.embed(2, 2))) == ncls);
  // the normal image is M^2 minus {(l,0), (0,l)}: 14 elements
  Mask im = normal_image(f, members);
  CHECK(mask_count(im) == 14);
  CHECK_FALSE(im[static_cast<std::size_t>(sm.embed(1, 0))]);
  CHECK_FALSE(im[static_cast<std::size_t>(sm.embed(0, 1))]);
  // (l,m) is in the normal image though not in E + diagonal-sums
  CHECK(im[static_cast<std::size_t>(sm.embed(1, 2))]);
}

TEST_CASE("Example coker: three elements share one image class") {
  // F = sM with M = B^2 = {0,m,l,n} (here m=a=1, l=b=2 to match the submodule)
  SFunctor sm = s_functor(build::boolean_module(2));
  InvPtr f = sm.object;
  // E1 = {(0,0),(0,m),(m,0),(m,m),(l,l),(l,n),(n,l),(n,n)} with m=1, l=2, n=3
  Mask e1(static_cast<std::size_t>(f->size()), false);
  for (auto [x, y] : std::vector<std::pair<Idx, Idx>>{
           {0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}})
    e1[static_cast<std::size_t>(sm.embed(x, y))] = true;
  InvQuotient q = inv_cokernel_of_subset(f, e1);
  // xi = (0,l), eta = (m,m): the three sums (0,n),(m,n),(m,l) collapse
  Idx a = q.projection(sm.embed(0, 3));
  Idx b = q.projection(sm.embed(1, 3));
  Idx c = q.projection(sm.embed(1, 2));
  CHECK(a == b);
  CHECK(b == c);
}

TEST_CASE("normal image: three algorithms agree on sigma-stable submodules") {
  std::vector<InvPtr> family = small_inv_modules();
  family.push_back(build::object_r_prime());                            // 8 elements
  family.push_back(build::object_r());                                  // 10 elements
  family.push_back(make_inv(build::boolean_module(3), {0, 4, 2, 6, 1, 5, 3, 7}));  // a<->c
  for (const InvPtr& e : family) {
    const Idx n = e->size();
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
      Mask raw(static_cast<std::size_t>(n), false);
      for (Idx i = 0; i < n; ++i)
        if (bits & (1ull << i)) raw[static_cast<std::size_t>(i)] = true;
      Mask aug = augment_subobject(*e, raw);
      Mask a = normal_image_filtration(e, aug);
      Mask b = normal_image_biorthogonal(e, aug);
      Mask c = normal_image_cokernel(e, aug);
      CHECK(a == b);
      CHECK(a == c);
      // normal image of a normal subobject is itself
      if (a == aug) CHECK(is_normal_subobject(e, aug));
    }
  }
}

TEST_CASE("the Im^(2) minus Im^(1) witness") {
  // F = sN, N = 3-chain {0<m<n}; E as in the worked computation.
  SFunctor sn = s_functor(build::chain(3));
  InvPtr f = sn.object;
  Mask e(static_cast<std::size_t>(f->size()), false);
  for (auto [x, y] : std::vector<std::pair<Idx, Idx>>{
           {0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}})
    e[static_cast<std::size_t>(sn.embed(x, y))] = true;
  Idx xi = sn.embed(0, 2);
  CHECK(normal_image_level(f, e, xi) == 2);
  Mask im = normal_image(f, e);
  CHECK(im[static_cast<std::size_t>(xi)]);
}

TEST_CASE("exactness: five-term sequence and strictness implication") {
  for (const InvPtr& l : small_inv_modules())
    for (const InvPtr& m : small_inv_modules()) {
      for (const InvMorphism& f : inv_hom_set(l, m)) {
        // 0 -> Ker f -> L -> M -> Coker f -> 0 exact everywhere
        InvSub ker = inv_kernel(f);
        InvQuotient cok = inv_cokernel(f);
        InvMorphism from_zero = inv_zero(zero_inv(), ker.module);
        InvMorphism to_zero = inv_zero(cok.object, zero_inv());
        Exactness at_ker = exactness(from_zero, ker.inclusion);
        CHECK(at_ker.exact);
        Exactness at_l = exactness(ker.inclusion, f);
        CHECK(at_l.exact);
        Exactness at_m = exactness(f, cok.projection);
        CHECK(at_m.exact);
        Exactness at_cok = exactness(cok.projection, to_zero);
        CHECK(at_cok.exact);
        // strict implies exact is asserted inside exactness(); also check
        // ker(cok(ker)) = ker and cok(ker(cok)) = cok.
        InvSub ker2 = inv_kernel(cok.projection);  // normal image of f
        InvQuotient cok2 = inv_cokernel(ker2.inclusion);
        for (Idx x = 0; x < m->size(); ++x)
          for (Idx y = 0; y < m->size(); ++y)
            CHECK((cok2.projection(x) == cok2.projection(y)) ==
                  (cok.projection(x) == cok.projection(y)));
        InvQuotient cokk = inv_cokernel(ker.inclusion);
        InvSub kerkk = inv_kernel(cokk.projection);
        CHECK(kerkk.members == ker.members);
      }
    }
}

TEST_CASE("strictly exact example: mu v mu on the finite wedge") {
  InvPtr e = build::wedge_double(build::chain(3));
  SFunctor sb = s_functor(build::bool_b());
  InvMorphism mu = build::wedge_mu(e, sb);
  CHECK(kernel_is_null(mu));
  CHECK(mu.is_surjective());
  // the sequence 0 -> X v X -> sB -> 0 is strictly exact
  Exactness left = exactness(inv_zero(zero_inv(), e), mu);
  CHECK(left.strict);
  Exactness right = exactness(mu, inv_zero(sb.object, zero_inv()));
  CHECK(right.strict);
  // but mu v mu is not sigma-injective (kernel null does not help here)
  CHECK_FALSE(sigma_injective(mu));
  // support of mu v mu is {0, u, u', t}: carrier indices 0, 2, 4, 5 for the
  // wedge over the 3-chain (u = top of each copy).
  SupportDecomposition d = support_decomposition(mu.underlying());
  CHECK(mask_count(d.support) == 4);
  CHECK(d.support[0]);
  CHECK(d.support[2]);
  CHECK(d.support[4]);
  CHECK(d.support[static_cast<std::size_t>(e->size() - 1)]);  // t
}

TEST_CASE("nsb: non-modularity of Nsb(sN) with witness") {
  SFunctor sn = s_functor(build::chain(3));
  NsbLattice l = nsb(sn.object);
  auto w = modularity_failure(l);
  REQUIRE(w.has_value());
  CHECK(l.leq(w->e, w->g));
  CHECK(l.meet(l.join(w->e, w->f), w->g) != l.join(w->e, l.meet(w->f, w->g)));
  // every member is a kernel realized by its cokernel construction
  for (const Mask& m : l.members) CHECK(is_normal_subobject(sn.object, m));
}

TEST_CASE("nsb of a null object is the one-point lattice") {
  InvPtr e = make_null(build::chain(3));
  NsbLattice l = nsb(e);
  CHECK(l.members.size() == 1);
  CHECK(mask_count(l.members[0]) == static_cast<std::size_t>(e->size()));
  // brute-force: kernels of all morphisms into small inv modules
  std::set<Mask> kernels;
  for (const InvPtr& x : small_inv_modules())
    for (const InvMorphism& h : inv_hom_set(e, x)) kernels.insert(inv_kernel(h).members);
  CHECK(kernels.size() == 1);
}

TEST_CASE("Example excok1: the sum of two normal subobjects need not be normal") {
  SFunctor sm = s_functor(build::boolean_module(2));
  InvPtr e = sm.object;
  // E1 = {0,m} x {0,m} + diag, E2 = {0,n} x {0,n} + diag (m=1? here use m=1,n=3)
  Mask e1(static_cast<std::size_t>(e->size()), false);
  for (Idx x : {0, 1})
    for (Idx y : {0, 1}) e1[static_cast<std::size_t>(sm.embed(x, y))] = true;
  e1 = augment_subobject(*e, e1);
  Mask e2(static_cast<std::size_t>(e->size()), false);
  for (Idx x : {0, 3})
    for (Idx y : {0, 3}) e2[static_cast<std::size_t>(sm.embed(x, y))] = true;
  e2 = augment_subobject(*e, e2);
  CHECK(is_normal_subobject(e, e1));
  CHECK(is_normal_subobject(e, e2));
  Mask sum(static_cast<std::size_t>(e->size()), false);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = e1[i] || e2[i];
  sum = join_closure(*e->base(), sum);
  CHECK_FALSE(is_normal_subobject(e, sum));
  Mask closure = normal_image(e, sum);
  CHECK(mask_count(closure) == 14);
  CHECK(mask_count(closure) > mask_count(sum));
}

TEST_CASE("direct and inverse images form a Galois connection on Nsb") {
  for (const InvPtr& e : small_inv_modules())
    for (const InvPtr& f : small_inv_modules())
      for (const InvMorphism& h : inv_hom_set(e, f)) {
        NsbLattice ne = nsb(e);
        NsbLattice nf = nsb(f);
        // identity morphism: both act as identity (checked via h == id case)
        for (const Mask& m : ne.members)
          for (const Mask& big : nf.members) {
            Mask dm = direct_image(h, m);
            Mask im = inverse_image(h, big);
            // adjunction: f_*(m) <= M  <=>  m <= f^*(M)
            bool lhs = true;
            for (std::size_t i = 0; i < dm.size(); ++i)
              if (dm[i] && !big[i]) lhs = false;
            bool rhs = true;
            for (std::size_t i = 0; i < m.size(); ++i)
              if (m[i] && !im[i]) rhs = false;
            CHECK(lhs == rhs);
          }
        // inverse image of a kernel is the kernel of the composite
        for (const InvPtr& z : small_inv_modules())
          for (const InvMorphism& g : inv_hom_set(f, z)) {
            Mask kg = inv_kernel(g).members;
            CHECK(inverse_image(h, kg) == inv_kernel(inv_compose(g, h)).members);
          }
      }
}

TEST_CASE("duality: (sB)* iso sB, Coker* = Ker* on small instances") {
  SFunctor sb = s_functor(build::bool_b());
  InvDual dsb = dual_inv(sb.object);
  CHECK(inv_isomorphic(dsb.object, sb.object));
  for (const InvPtr& e : small_inv_modules())
    for (const InvPtr& f : small_inv_modules())
      for (const InvMorphism& h : inv_hom_set(e, f)) {
        InvQuotient cok = inv_cokernel(h);
        InvDual dual_cok = dual_inv(cok.object);
        InvMorphism hstar = dual_of_inv_morphism(h);
        InvSub ker_hstar = inv_kernel(hstar);
        CHECK(inv_isomorphic(dual_cok.object, ker_hstar.module));
      }
}

TEST_CASE("orthogonal and the normal-closure lemma") {
  for (const InvPtr& e : small_inv_modules()) {
    const Idx n = e->size();
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
      Mask raw(static_cast<std::size_t>(n), false);
      for (Idx i = 0; i < n; ++i)
        if (bits & (1ull << i)) raw[static_cast<std::size_t>(i)] = true;
      Mask aug = augment_subobject(*e, raw);
      // (F-perp)-perp computed through the pairing equals the normal image
      Mask ni = normal_image(e, aug);
      CHECK(normal_image_biorthogonal(e, aug) == ni);
    }
  }
}

TEST_CASE("orthogonal: defining property and double perp") {
  for (const InvPtr& e : small_inv_modules()) {
    const Idx n = e->size();
    const Idx t = e->base()->top();
    std::vector<Idx> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[static_cast<std::size_t>(t)]);
    for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
      Mask raw(static_cast<std::size_t>(n), false);
      for (Idx i = 0; i < n; ++i)
        if (bits & (1ull << i)) raw[static_cast<std::size_t>(i)] = true;
      Mask aug = augment_subobject(*e, raw);
      Mask perp = orthogonal(e, aug);
      // defining property: dual element i <-> functional vanishing on [0, perm(i)]
      for (Idx i = 0; i < n; ++i) {
        Idx u = perm[static_cast<std::size_t>(i)];
        bool expect = true;
        for (Idx x = 0; x < n; ++x)
          if (aug[static_cast<std::size_t>(x)] && !pairing_null(*e, x, u)) expect = false;
        CHECK(perp[static_cast<std::size_t>(i)] == expect);
      }
      // the double perp recovers the normal image
      Mask ni = normal_image(e, aug);
      for (Idx x = 0; x < n; ++x) {
        bool in_double = true;
        for (Idx i = 0; i < n && in_double; ++i)
          if (perp[static_cast<std::size_t>(i)] &&
              !pairing_null(*e, x, perm[static_cast<std::size_t>(i)]))
            in_double = false;
        CHECK(in_double == ni[static_cast<std::size_t>(x)]);
      }
      // sigma-stability of the perp inside the dual
      InvDual d = dual_inv(e);
      for (Idx i = 0; i < n; ++i)
        if (perp[static_cast<std::size_t>(i)])
          CHECK(perp[static_cast<std::size_t>(d.object->sigma(i))]);
    }
  }
}

TEST_CASE("separate on a submodule of a product") {
  // the three-element chain sitting inside B^2 x B^2
  Product sq = product(build::boolean_module(2), build::boolean_module(2));
  Mask m(static_cast<std::size_t>(sq.module->size()), false);
  m[static_cast<std::size_t>(sq.pair_index(0, 0))] = true;
  m[static_cast<std::size_t>(sq.pair_index(0, 1))] = true;
  m[static_cast<std::size_t>(sq.pair_index(1, 3))] = true;
  for (Idx xi = 0; xi < sq.module->size(); ++xi) {
    if (m[static_cast<std::size_t>(xi)]) continue;
    auto [phi, psi] = separate(sq.module, m, xi);
    CHECK(phi.contains(xi));
    CHECK_FALSE(psi.contains(xi));
    for (Idx e = 0; e < sq.module->size(); ++e)
      if (m[static_cast<std::size_t>(e)]) CHECK(phi.contains(e) == psi.contains(e));
  }
}

TEST_CASE("sigma-injectivity: characterizations on R and the wedge") {
  InvPtr r = build::object_r();
  CHECK(dual_min_generated(r->base()));
  // every null-kernel morphism out of R into small objects is injective
  for (const InvPtr& x : small_inv_modules())
    for (const InvMorphism& f : inv_hom_set(r, x))
      if (kernel_is_null(f)) CHECK(f.is_injective());
  KernelNullReport rep = kernel_null_tests(r, small_inv_modules());
  CHECK(rep.dual_min_generated);
  CHECK(rep.equivalence_holds);
  CHECK(rep.strong_implication_holds);
  // f injective => kernel null, everywhere
  for (const InvPtr& e : small_inv_modules())
    for (const InvPtr& x : small_inv_modules())
      for (const InvMorphism& f : inv_hom_set(e, x))
        if (f.is_injective()) CHECK(kernel_is_null(f));
  // the ten listed elements are distinct for suitable x, y
  {
    InvPtr big = s_functor(build::boolean_module(2)).object;
    // x = (a,0), y = (b,0): p(x) = (a,a)... need p(x) = p(y); take x=(a,b), y=(b,a)?
    // choose x, y with p(x) = p(y), x+y and x+sigma(y) non-null:
    SFunctor sq = s_functor(build::boolean_module(2));
    bool found = false;
    for (Idx x = 0; x < big->size() && !found; ++x)
      for (Idx y = 0; y < big->size() && !found; ++y) {
        if (x == y) continue;
        if (big->p(x) != big->p(y)) continue;
        if (big->is_fixed(big->join(x, y))) continue;
        if (big->is_fixed(big->join(x, big->sigma(y)))) continue;
        found = true;
        // f = identity has null kernel; the ten elements must be distinct
        std::set<Idx> ten = {0,
                             x,
                             big->sigma(x),
                             y,
                             big->sigma(y),
                             big->join(x, y),
                             big->sigma(big->join(x, y)),
                             big->join(x, big->sigma(y)),
                             big->join(y, big->sigma(x)),
                             big->p(x)};
        CHECK(ten.size() == 10);
      }
    CHECK(found);
  }
  // the wedge fails the hypothesis and the equivalence
  InvPtr w = build::wedge_double(build::chain(3));
  CHECK_FALSE(dual_min_generated(w->base()));
}

TEST_CASE("pushout: cokernel as pushout against p, and the non-null kernel example") {
  // h = p: E -> E^sigma gives pushout = Coker(f)
  for (const InvPtr& e : small_inv_modules())
    for (const InvPtr& f : small_inv_modules())
      for (const InvMorphism& h : inv_hom_set(e, f)) {
        // p as a morphism onto the null submodule of e
        Mask fixed = e->fixed_mask();
        InvSub esigma = inv_submodule(e, fixed);
        std::vector<Idx> pmap(static_cast<std::size_t>(e->size()));
        for (Idx x = 0; x < e->size(); ++x)
          pmap[static_cast<std::size_t>(x)] = esigma.index_in[static_cast<std::size_t>(e->p(x))];
        InvMorphism p(e, esigma.module, std::move(pmap));
        PushoutResult po = pushout(h, p);
        InvQuotient cok = inv_cokernel(h);
        CHECK(inv_isomorphic(po.object, cok.object));
        for (Idx x = 0; x < f->size(); ++x)
          for (Idx y = 0; y < f->size(); ++y)
            CHECK((po.from_cod_f(x) == po.from_cod_f(y)) == (cok.projection(x) == cok.projection(y)));
      }
  // Z = 0 and f(E) containing the top of F makes the pushout null
  {
    SFunctor sb = s_functor(build::bool_b());
    InvMorphism mu = build::wedge_mu(build::wedge_double(build::chain(2)), sb);
    InvMorphism to_zero = inv_zero(mu.dom(), zero_inv());
    PushoutResult po = pushout(mu, to_zero);
    CHECK(po.object->is_null_object());
  }
  // Example: z lands in the kernel of the pushed-out morphism
  {
    InvPtr e = build::wedge_double(build::chain(3));  // N v N, N = {0<m<n}
    SFunctor sb = s_functor(build::bool_b());
    InvMorphism h = build::wedge_mu(e, sb);  // mu v mu
    // F: adjoin z, sigma(z) with m < z, z v n = t and cross joins = t
    // carrier: 0 m n m' n' z z' t  (e carrier is 0 m n m' n' t)
    const Idx nF = 8;
    auto idx = [](const std::string& s) {
      static const std::vector<std::string> names = {"0", "m", "n", "m'", "n'", "z", "z'", "t"};
      return static_cast<Idx>(std::find(names.begin(), names.end(), s) - names.begin());
    };
    std::vector<std::string> names = {"0", "m", "n", "m'", "n'", "z", "z'", "t"};
    std::vector<Idx> t(static_cast<std::size_t>(nF) * nF);
    auto set = [&](const std::string& a, const std::string& b, const std::string& v) {
      t[static_cast<std::size_t>(idx(a)) * nF + idx(b)] = idx(v);
      t[static_cast<std::size_t>(idx(b)) * nF + idx(a)] = idx(v);
    };
    for (Idx i = 0; i < nF; ++i) {
      t[static_cast<std::size_t>(i) * nF + i] = i;
      set("0", names[static_cast<std::size_t>(i)], names[static_cast<std::size_t>(i)]);
      set("t", names[static_cast<std::size_t>(i)], "t");
    }
    set("m", "n", "n");
    set("m'", "n'", "n'");
    for (const std::string& a : {"m", "n"})
      for (const std::string& b : {"m'", "n'"}) set(a, b, "t");
    set("m", "z", "z");
    set("n", "z", "t");
    set("m'", "z'", "z'");
    set("n'", "z'", "t");
    set("m'", "z", "t");
    set("n'", "z", "t");
    set("m", "z'", "t");
    set("n", "z'", "t");
    set("z", "z'", "t");
    ModulePtr base = BModule::make(names, t);
    std::vector<Idx> sg = {0, 3, 4, 1, 2, 6, 5, 7};
    InvPtr f = make_inv(base, sg);
    // e embeds into f
    std::vector<Idx> emb = {0, 1, 2, 3, 4, 7};
    InvMorphism incl(e, f, emb);
    PushoutResult po = pushout(incl, h);
    // z is in the kernel of the pushed-out map F -> pushout? kernel = preimage
    // of fixed classes
    Idx zclass = po.from_cod_f(idx("z"));
    CHECK(po.object->is_fixed(zclass));
    CHECK_FALSE(f->is_fixed(idx("z")));
  }
}

TEST_CASE("fixed_coker_iso on inclusions") {
  for (const InvPtr& e : small_inv_modules()) {
    // identity inclusion: cokernel of the whole object
    Mask all(static_cast<std::size_t>(e->size()), true);
    CHECK_NOTHROW(fixed_coker_iso(e, all));
    // the excok instance
  }
  InvPtr f = excok_f();
  SFunctor sm = s_functor(build::boolean_module(2));
  Mask members(static_cast<std::size_t>(f->size()), false);
  for (Idx x : {0, 2, 3})
    for (Idx y : {0, 2, 3}) members[static_cast<std::size_t>(sm.embed(x, y))] = true;
  members = augment_subobject(*f, members);
  FixedCokerIso iso = fixed_coker_iso(f, members);
  CHECK(iso.to_coker.size() == mask_count(f->fixed_mask()));
}

TEST_CASE("injective and projective objects") {
  for (Idx k = 1; k <= 2; ++k) {
    SFunctor s = s_functor(build::boolean_module(k));
    CHECK(is_injective_obj(s.object));
    CHECK(is_projective_obj(s.object));
  }
  CHECK(is_injective_obj(make_null(build::bool_b())));
  // E with E^sigma = B and more than 4 elements is neither
  InvPtr w = build::wedge_double(build::chain(3));  // 6 elements, fixed = {0,t}
  CHECK(mask_count(w->fixed_mask()) == 2);
  CHECK_FALSE(is_injective_obj(w));
  CHECK_FALSE(is_projective_obj(w));
}

TEST_CASE("normal monos and epis compose; ex3 subquotient") {
  for (const InvPtr& e : small_inv_modules()) {
    NsbLattice l = nsb(e);
    for (const Mask& m : l.members) {
      InvSub sub = inv_submodule(e, m);
      CHECK(is_normal_mono(sub.inclusion));
      InvQuotient q = inv_cokernel_of_subset(e, m);
      CHECK(is_normal_epi(q.projection));
      // composition closure through a second stage
      NsbLattice l2 = nsb(sub.module);
      for (const Mask& m2 : l2.members) {
        InvSub sub2 = inv_submodule(sub.module, m2);
        CHECK(is_normal_mono(inv_compose(sub.inclusion, sub2.inclusion)));
      }
      NsbLattice lq = nsb(q.object);
      for (const Mask& mq : lq.members) {
        InvQuotient q2 = inv_cokernel_of_subset(q.object, mq);
        CHECK(is_normal_epi(inv_compose(q2.projection, q.projection)));
      }
      // ex3: subquotients through any normal epi whose kernel sits inside m
      InvSub kerq = inv_kernel(q.projection);
      for (const Mask& m3 : l.members) {
        bool contains = true;
        for (std::size_t i = 0; i < m3.size(); ++i)
          if (kerq.members[i] && !m3[i]) contains = false;
        if (!contains) continue;
        Ex3Result r = ex3_subquotient(e, m3, q.projection);
        // q o m = k o q'
        InvMorphism lhs = inv_compose(q.projection, r.m_sub.inclusion);
        InvMorphism rhs = inv_compose(r.s_sub.inclusion, r.qprime);
        CHECK(lhs == rhs);
        CHECK(is_exact_morphism(lhs));
        // m = ker(q) gives a null subquotient; m = everything gives Q itself
        if (m3 == kerq.members) CHECK(r.s_sub.module->is_null_object());
        if (mask_count(m3) == static_cast<std::size_t>(e->size()))
          CHECK(r.s_sub.module->size() == q.object->size());
      }
    }
  }
}

TEST_CASE("any sequence through a null middle is strictly exact there") {
  InvPtr nul = make_null(build::chain(3));
  for (const InvPtr& l : small_inv_modules())
    for (const InvPtr& n : small_inv_modules())
      for (const InvMorphism& f : inv_hom_set(l, nul))
        for (const InvMorphism& g : inv_hom_set(nul, n)) CHECK(exactness(f, g).strict);
}

TEST_CASE("elements with the same projection are R-chain connected") {
  // x R y iff x + sigma(y) is fixed; p(x) = p(y) forces x ~ x+y ~ y.
  for (const InvPtr& e : small_inv_modules())
    for (Idx x = 0; x < e->size(); ++x)
      for (Idx y = 0; y < e->size(); ++y) {
        if (e->p(x) != e->p(y)) continue;
        Idx s = e->join(x, y);
        CHECK(e->is_fixed(e->join(x, e->sigma(s))));
        CHECK(e->is_fixed(e->join(y, e->sigma(s))));
      }
}

TEST_CASE("use of T: mono/epi through strict exactness of the squared maps") {
  for (const InvPtr& e : small_inv_modules())
    for (const InvPtr& f : small_inv_modules())
      for (const InvMorphism& h : inv_hom_set(e, f)) {
        TFunctor te = t_functor(e);
        TFunctor tf = t_functor(f);
        InvMorphism th = s_of(te.s, tf.s, h.underlying());
        Exactness mono_seq = exactness(inv_zero(zero_inv(), te.object), th);
        CHECK(mono_seq.strict == h.is_injective());
        Exactness epi_seq = exactness(th, inv_zero(tf.object, zero_inv()));
        CHECK(epi_seq.strict == h.is_surjective());
      }
}
