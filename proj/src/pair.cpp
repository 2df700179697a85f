#include "bmod/pair.hpp"

#include <algorithm>
#include <map>

namespace bmod {

PairMorphism::PairMorphism(Morphism f_, Morphism g_) : f(std::move(f_)), g(std::move(g_)) {
  if (!f.dom()->same_structure(*g.dom()) || !f.cod()->same_structure(*g.cod()))
    throw DomainMismatch("pair morphism: components are not parallel");
}

PairMorphism kappa(const Morphism& f) { return PairMorphism(f, zero_morphism(f.dom(), f.cod())); }

PairMorphism pair_identity(const ModulePtr& m) { return kappa(identity(m)); }

PairMorphism pair_compose(const PairMorphism& p, const PairMorphism& q) {
  if (!q.cod()->same_structure(*p.dom()))
    throw DomainMismatch("pair_compose: codomain of inner pair differs from domain of outer pair");
  Morphism ff = compose(p.f, q.f), gg = compose(p.g, q.g);
  Morphism fg = compose(p.f, q.g), gf = compose(p.g, q.f);
  return PairMorphism(join_morphisms(ff, gg), join_morphisms(fg, gf));
}

PairSubmodule z_submodule(const PairMorphism& p) {
  Product sq = product(p.dom(), p.dom());
  const BModule& cod = *p.cod();
  Mask members(static_cast<std::size_t>(sq.module->size()), false);
  for (Idx x = 0; x < p.dom()->size(); ++x)
    for (Idx y = 0; y < p.dom()->size(); ++y)
      if (cod.join(p.f(x), p.g(y)) == cod.join(p.f(y), p.g(x)))
        members[static_cast<std::size_t>(sq.pair_index(x, y))] = true;
  return PairSubmodule{std::move(sq), std::move(members)};
}

PairSubmodule b_submodule(const PairMorphism& p) {
  Product sq = product(p.cod(), p.cod());
  const BModule& cod = *p.cod();
  Mask members(static_cast<std::size_t>(sq.module->size()), false);
  for (Idx x = 0; x < p.dom()->size(); ++x)
    for (Idx y = 0; y < p.dom()->size(); ++y)
      members[static_cast<std::size_t>(
          sq.pair_index(cod.join(p.f(x), p.g(y)), cod.join(p.f(y), p.g(x))))] = true;
  return PairSubmodule{std::move(sq), std::move(members)};
}

ExactnessWitness strictly_exact_at(const SequencePair& s) {
  if (!s.left.cod()->same_structure(*s.right.dom()))
    throw DomainMismatch("strictly_exact_at: sequence is not composable");
  const ModulePtr& m = s.right.dom();
  PairSubmodule b = b_submodule(s.left);
  PairSubmodule z = z_submodule(s.right);
  // B + Delta: joins of B elements with diagonal elements.
  Mask bplus(static_cast<std::size_t>(b.square.module->size()), false);
  for (Idx e = 0; e < b.square.module->size(); ++e) {
    if (!b.members[static_cast<std::size_t>(e)]) continue;
    for (Idx d = 0; d < m->size(); ++d) {
      Idx diag = b.square.pair_index(d, d);
      bplus[static_cast<std::size_t>(b.square.module->join(e, diag))] = true;
    }
  }
  for (Idx e = 0; e < b.square.module->size(); ++e) {
    if (bplus[static_cast<std::size_t>(e)] == z.members[static_cast<std::size_t>(e)]) continue;
    auto [x, y] = b.square.unpair(e);
    return ExactnessWitness{false, std::make_pair(x, y), z.members[static_cast<std::size_t>(e)]};
  }
  return ExactnessWitness{true, std::nullopt, false};
}

std::vector<Idx> doubling_map(const PairMorphism& p) {
  const BModule& dom = *p.dom();
  const BModule& cod = *p.cod();
  const Idx n = dom.size(), nc = cod.size();
  std::vector<Idx> out(static_cast<std::size_t>(n) * n);
  for (Idx x = 0; x < n; ++x)
    for (Idx y = 0; y < n; ++y)
      out[static_cast<std::size_t>(x * n + y)] =
          cod.join(p.f(x), p.g(y)) * nc + cod.join(p.g(x), p.f(y));
  return out;
}

namespace {

// Unique-decomposition test: (x1,x2) -> x1 + x2 is a bijection N1 x N2 -> N.
bool is_decomposition(const BModule& n, const std::vector<Idx>& n1, const std::vector<Idx>& n2) {
  if (n1.size() * n2.size() != static_cast<std::size_t>(n.size())) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n.size()), false);
  for (Idx a : n1)
    for (Idx b : n2) {
      Idx s = n.join(a, b);
      if (hit[static_cast<std::size_t>(s)]) return false;
      hit[static_cast<std::size_t>(s)] = true;
    }
  return true;
}

// All hereditary submodule masks (down-closed and join-closed subsets).
std::vector<Mask> hereditary_submodules(const BModule& m) {
  std::vector<Mask> out;
  const Idx n = m.size();
  // Enumerate subsets of the non-zero elements and filter; fine at these sizes.
  const Idx k = n - 1;
  if (k > 30) throw LimitExceeded("hereditary submodule enumeration: module too large");
  for (std::uint64_t bits = 0; bits < (1ull << k); ++bits) {
    Mask mem(static_cast<std::size_t>(n), false);
    mem[0] = true;
    for (Idx i = 0; i < k; ++i)
      if (bits & (1ull << i)) mem[static_cast<std::size_t>(i + 1)] = true;
    bool ok = true;
    auto elems = mask_to_list(mem);
    for (Idx x : elems) {
      for (Idx y : elems)
        if (!mem[static_cast<std::size_t>(m.join(x, y))]) ok = false;
      for (Idx y = 0; y < n && ok; ++y)
        if (m.leq(y, x) && !mem[static_cast<std::size_t>(y)]) ok = false;
      if (!ok) break;
    }
    if (ok) out.push_back(std::move(mem));
  }
  return out;
}

}  // namespace

PairClassification classify(const PairMorphism& p) {
  PairClassification res;
  const BModule& cod = *p.cod();
  const Idx n = p.dom()->size();

  std::vector<Idx> dbl = doubling_map(p);
  res.mono = true;
  std::map<Idx, Idx> seen;
  for (Idx e = 0; e < n * n && res.mono; ++e) {
    auto [it, fresh] = seen.emplace(dbl[static_cast<std::size_t>(e)], e);
    if (!fresh) {
      res.mono = false;
      res.mono_witness = std::make_pair(it->second, e);
    }
  }

  PairSubmodule b = b_submodule(p);
  res.epi = true;
  for (Idx e = 0; e < b.square.module->size(); ++e)
    if (!b.members[static_cast<std::size_t>(e)]) {
      res.epi = false;
      res.epi_witness = e;
      break;
    }

  // iso <=> strict exactness of 0 => M => N => 0, i.e. Z = Delta and B = N x N.
  PairSubmodule z = z_submodule(p);
  bool z_is_diagonal = true;
  for (Idx x = 0; x < n && z_is_diagonal; ++x)
    for (Idx y = 0; y < n && z_is_diagonal; ++y)
      if (z.members[static_cast<std::size_t>(z.square.pair_index(x, y))] != (x == y))
        z_is_diagonal = false;
  res.iso = z_is_diagonal && res.epi;

  if (res.iso) {
    // Unique decomposition of the codomain: N1 = Range(f), N2 = Range(g),
    // alpha(x) = f(x) + g(x).
    Submodule n1 = submodule(p.cod(), p.f.range());
    Submodule n2 = submodule(p.cod(), p.g.range());
    std::vector<Idx> amap(static_cast<std::size_t>(n));
    for (Idx x = 0; x < n; ++x) amap[static_cast<std::size_t>(x)] = cod.join(p.f(x), p.g(x));
    Morphism alpha(p.dom(), p.cod(), std::move(amap));
    if (!alpha.is_injective() || !alpha.is_surjective() ||
        !is_decomposition(cod, n1.elems, n2.elems))
      throw Error("classify: invertible pair failed to decompose");
    res.decomposition = IsoDecomposition{std::move(n1), std::move(n2), std::move(alpha)};
  }
  return res;
}

AutGroup aut_group(const ModulePtr& m, const SearchLimits& limits) {
  AutGroup out;
  const BModule& M = *m;
  out.module_auts = automorphisms(m, limits);

  // The 2-group: ordered decompositions M = M1 x M2 yield the pair of
  // projections (p1, p2).  Projections send x = x1 + x2 to its components.
  auto subs = hereditary_submodules(M);
  for (const Mask& a : subs)
    for (const Mask& b : subs) {
      auto ea = mask_to_list(a), eb = mask_to_list(b);
      if (!is_decomposition(M, ea, eb)) continue;
      std::vector<Idx> p1(static_cast<std::size_t>(M.size())), p2(static_cast<std::size_t>(M.size()));
      bool ok = true;
      for (Idx x = 0; x < M.size() && ok; ++x) {
        Idx x1 = -1, x2 = -1;
        for (Idx u : ea)
          for (Idx v : eb)
            if (M.join(u, v) == x) {
              x1 = u;
              x2 = v;
            }
        if (x1 < 0) ok = false;
        p1[static_cast<std::size_t>(x)] = x1;
        p2[static_cast<std::size_t>(x)] = x2;
      }
      if (!ok) continue;
      out.decompositions.emplace_back(Morphism(m, m, p1), Morphism(m, m, p2));
    }
  std::sort(out.decompositions.begin(), out.decompositions.end());
  out.decompositions.erase(std::unique(out.decompositions.begin(), out.decompositions.end()),
                           out.decompositions.end());

  // Units: every product beta o kappa(alpha) is a unit, and conversely each
  // unit factors uniquely this way.
  std::map<std::pair<std::vector<Idx>, std::vector<Idx>>, std::pair<Idx, Idx>> unit_index;
  for (Idx d = 0; d < static_cast<Idx>(out.decompositions.size()); ++d)
    for (Idx a = 0; a < static_cast<Idx>(out.module_auts.size()); ++a) {
      PairMorphism u = pair_compose(out.decompositions[static_cast<std::size_t>(d)],
                                    kappa(out.module_auts[static_cast<std::size_t>(a)]));
      auto key = std::make_pair(u.f.map(), u.g.map());
      if (unit_index.count(key)) throw Error("aut_group: factorization is not unique");
      unit_index.emplace(key, std::make_pair(d, a));
      out.units.push_back(std::move(u));
    }
  std::sort(out.units.begin(), out.units.end());
  for (const PairMorphism& u : out.units)
    out.factorization.push_back(unit_index.at(std::make_pair(u.f.map(), u.g.map())));
  return out;
}

}  // namespace bmod
