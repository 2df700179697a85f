#include "bmod/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bmod {

namespace {

std::string elem_label(const BModule& m, Idx x) {
  std::ostringstream os;
  os << "'" << m.name(x) << "' (#" << x << ")";
  return os.str();
}

}  // namespace

BModule::BModule(std::vector<std::string> names, std::vector<Idx> join_table)
    : n_(static_cast<Idx>(names.size())), names_(std::move(names)), join_(std::move(join_table)) {
  if (n_ < 1) throw ValidationError("Empty", {}, "a module needs at least the zero element");
  if (join_.size() != static_cast<std::size_t>(n_) * n_)
    throw ValidationError("Shape", {}, "join table is not square");
  for (Idx v : join_)
    if (v < 0 || v >= n_) throw ValidationError("Shape", {v}, "join table entry out of range");
  for (Idx x = 0; x < n_; ++x)
    if (join(x, x) != x)
      throw ValidationError("NotIdempotent", {x}, "x v x != x at " + elem_label(*this, x));
  for (Idx x = 0; x < n_; ++x)
    for (Idx y = x + 1; y < n_; ++y)
      if (join(x, y) != join(y, x))
        throw ValidationError("NotCommutative", {x, y},
                              "x v y != y v x at " + elem_label(*this, x) + ", " + elem_label(*this, y));
  for (Idx x = 0; x < n_; ++x)
    if (join(0, x) != x)
      throw ValidationError("ZeroNotNeutral", {x}, "0 v x != x at " + elem_label(*this, x));
  for (Idx x = 0; x < n_; ++x)
    for (Idx y = 0; y < n_; ++y)
      for (Idx z = 0; z < n_; ++z)
        if (join(join(x, y), z) != join(x, join(y, z))) {
          std::ostringstream os;
          os << "(x v y) v z != x v (y v z) at " << elem_label(*this, x) << ", "
             << elem_label(*this, y) << ", " << elem_label(*this, z);
          throw ValidationError("NotAssociative", {x, y, z}, os.str());
        }
}

ModulePtr BModule::make(std::vector<std::string> names, std::vector<Idx> join_table) {
  return std::make_shared<BModule>(std::move(names), std::move(join_table));
}

ModulePtr BModule::make(std::vector<std::string> names,
                        const std::vector<std::vector<Idx>>& table) {
  const std::size_t n = names.size();
  if (table.size() != n) throw ValidationError("Shape", {}, "join table is not square");
  std::vector<Idx> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw ValidationError("Shape", {}, "join table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make(std::move(names), std::move(flat));
}

Idx BModule::meet(Idx x, Idx y) const {
  Idx m = 0;
  for (Idx z = 0; z < n_; ++z)
    if (leq(z, x) && leq(z, y)) m = join(m, z);
  return m;
}

Idx BModule::top() const {
  Idx t = 0;
  for (Idx x = 0; x < n_; ++x) t = join(t, x);
  return t;
}

Idx BModule::join_all(const std::vector<Idx>& xs) const {
  Idx t = 0;
  for (Idx x : xs) t = join(t, x);
  return t;
}

std::vector<Idx> BModule::join_irreducibles() const {
  std::vector<Idx> out;
  for (Idx x = 1; x < n_; ++x) {
    Idx below = 0;
    for (Idx y = 0; y < n_; ++y)
      if (y != x && leq(y, x)) below = join(below, y);
    if (below != x) out.push_back(x);
  }
  return out;
}

bool BModule::covers(Idx x, Idx y) const {
  if (x == y || !leq(x, y)) return false;
  for (Idx z = 0; z < n_; ++z)
    if (z != x && z != y && leq(x, z) && leq(z, y)) return false;
  return true;
}

bool BModule::same_structure(const BModule& other) const {
  return n_ == other.n_ && join_ == other.join_;
}

ModulePtr zero_module() {
  static const ModulePtr z = BModule::make({"0"}, std::vector<Idx>{0});
  return z;
}

bool is_morphism_map(const BModule& dom, const BModule& cod, const std::vector<Idx>& map) {
  const Idx n = dom.size();
  if (map.size() != static_cast<std::size_t>(n)) return false;
  for (Idx v : map)
    if (v < 0 || v >= cod.size()) return false;
  if (map[0] != 0) return false;
  for (Idx x = 0; x < n; ++x)
    for (Idx y = x; y < n; ++y)
      if (map[static_cast<std::size_t>(dom.join(x, y))] !=
          cod.join(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

Morphism::Morphism(ModulePtr dom, ModulePtr cod, std::vector<Idx> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (!is_morphism_map(*dom_, *cod_, map_))
    throw ValidationError("NotMorphism", {}, "map does not preserve joins and zero");
}

bool Morphism::is_injective() const {
  std::vector<bool> seen(static_cast<std::size_t>(cod_->size()), false);
  for (Idx v : map_) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool Morphism::is_surjective() const { return mask_count(range()) == static_cast<std::size_t>(cod_->size()); }

Mask Morphism::range() const {
  Mask r(static_cast<std::size_t>(cod_->size()), false);
  for (Idx v : map_) r[static_cast<std::size_t>(v)] = true;
  return r;
}

Morphism identity(const ModulePtr& m) {
  std::vector<Idx> id(static_cast<std::size_t>(m->size()));
  std::iota(id.begin(), id.end(), 0);
  return Morphism(m, m, std::move(id));
}

Morphism zero_morphism(const ModulePtr& dom, const ModulePtr& cod) {
  return Morphism(dom, cod, std::vector<Idx>(static_cast<std::size_t>(dom->size()), 0));
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (!f.dom()->same_structure(*g.cod()))
    throw DomainMismatch("compose: codomain of inner map differs from domain of outer map");
  std::vector<Idx> map(static_cast<std::size_t>(g.dom()->size()));
  for (Idx x = 0; x < g.dom()->size(); ++x) map[static_cast<std::size_t>(x)] = f(g(x));
  return Morphism(g.dom(), f.cod(), std::move(map));
}

Morphism join_morphisms(const Morphism& f, const Morphism& g) {
  if (!f.dom()->same_structure(*g.dom()) || !f.cod()->same_structure(*g.cod()))
    throw DomainMismatch("join_morphisms: mismatched endpoints");
  std::vector<Idx> map(static_cast<std::size_t>(f.dom()->size()));
  for (Idx x = 0; x < f.dom()->size(); ++x) map[static_cast<std::size_t>(x)] = f.cod()->join(f(x), g(x));
  return Morphism(f.dom(), f.cod(), std::move(map));
}

// ---- Ideals -------------------------------------------------------------------

Ideal principal_ideal(const ModulePtr& m, Idx x) {
  Mask mem(static_cast<std::size_t>(m->size()), false);
  for (Idx y = 0; y < m->size(); ++y)
    if (m->leq(y, x)) mem[static_cast<std::size_t>(y)] = true;
  return Ideal{m, std::move(mem), x};
}

std::vector<Ideal> ideals(const ModulePtr& m) {
  std::vector<Ideal> out;
  out.reserve(static_cast<std::size_t>(m->size()));
  for (Idx x = 0; x < m->size(); ++x) out.push_back(principal_ideal(m, x));
  std::sort(out.begin(), out.end(),
            [](const Ideal& a, const Ideal& b) { return mask_less(a.members, b.members); });
  return out;
}

DualModule dual(const ModulePtr& m) {
  DualModule d;
  d.ideal_of = ideals(m);
  const Idx n = m->size();
  d.elem_to_dual.assign(static_cast<std::size_t>(n), -1);
  // Reorder so that the zero of the dual (the full ideal) sits at index 0.
  Idx full = -1;
  for (Idx i = 0; i < n; ++i)
    if (d.ideal_of[static_cast<std::size_t>(i)].generator == m->top()) full = i;
  std::swap(d.ideal_of[0], d.ideal_of[static_cast<std::size_t>(full)]);
  for (Idx i = 0; i < n; ++i)
    d.elem_to_dual[static_cast<std::size_t>(d.ideal_of[static_cast<std::size_t>(i)].generator)] = i;
  // Join of two functionals corresponds to intersecting their ideals, i.e. the
  // meet of the generators.
  std::vector<Idx> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (Idx i = 0; i < n; ++i) {
    names[static_cast<std::size_t>(i)] =
        "[0," + m->name(d.ideal_of[static_cast<std::size_t>(i)].generator) + "]";
    for (Idx j = 0; j < n; ++j) {
      Idx g = m->meet(d.ideal_of[static_cast<std::size_t>(i)].generator,
                      d.ideal_of[static_cast<std::size_t>(j)].generator);
      table[static_cast<std::size_t>(i) * n + j] = d.elem_to_dual[static_cast<std::size_t>(g)];
    }
  }
  d.module = BModule::make(std::move(names), std::move(table));
  return d;
}

Idx dual_eval(const DualModule& d, Idx phi, Idx x) {
  return d.ideal_of[static_cast<std::size_t>(phi)].contains(x) ? 0 : 1;
}

// ---- Products and submodules ----------------------------------------------------

Idx Product::pair_index(Idx x, Idx y) const { return x * right->size() + y; }
std::pair<Idx, Idx> Product::unpair(Idx z) const { return {z / right->size(), z % right->size()}; }

Product product(const ModulePtr& m, const ModulePtr& n) {
  const Idx nm = m->size(), nn = n->size(), N = nm * nn;
  std::vector<std::string> names(static_cast<std::size_t>(N));
  std::vector<Idx> table(static_cast<std::size_t>(N) * N);
  auto idx = [&](Idx x, Idx y) { return x * nn + y; };
  for (Idx x = 0; x < nm; ++x)
    for (Idx y = 0; y < nn; ++y)
      names[static_cast<std::size_t>(idx(x, y))] = "(" + m->name(x) + "," + n->name(y) + ")";
  for (Idx a = 0; a < N; ++a)
    for (Idx b = 0; b < N; ++b) {
      Idx ax = a / nn, ay = a % nn, bx = b / nn, by = b % nn;
      table[static_cast<std::size_t>(a) * N + b] = idx(m->join(ax, bx), n->join(ay, by));
    }
  ModulePtr p = BModule::make(std::move(names), std::move(table));
  std::vector<Idx> p1(static_cast<std::size_t>(N)), p2(static_cast<std::size_t>(N)),
      s1(static_cast<std::size_t>(nm)), s2(static_cast<std::size_t>(nn));
  for (Idx a = 0; a < N; ++a) {
    p1[static_cast<std::size_t>(a)] = a / nn;
    p2[static_cast<std::size_t>(a)] = a % nn;
  }
  for (Idx x = 0; x < nm; ++x) s1[static_cast<std::size_t>(x)] = idx(x, 0);
  for (Idx y = 0; y < nn; ++y) s2[static_cast<std::size_t>(y)] = idx(0, y);
  return Product{p,
                 m,
                 n,
                 Morphism(p, m, std::move(p1)),
                 Morphism(p, n, std::move(p2)),
                 Morphism(m, p, std::move(s1)),
                 Morphism(n, p, std::move(s2))};
}

Mask join_closure(const BModule& m, Mask members) {
  members[0] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    auto elems = mask_to_list(members);
    for (Idx x : elems)
      for (Idx y : elems) {
        Idx j = m.join(x, y);
        if (!members[static_cast<std::size_t>(j)]) {
          members[static_cast<std::size_t>(j)] = true;
          changed = true;
        }
      }
  }
  return members;
}

Submodule submodule(const ModulePtr& m, const Mask& members) {
  if (!members[0]) throw PreconditionViolated("submodule: must contain 0");
  auto elems = mask_to_list(members);
  const Idx k = static_cast<Idx>(elems.size());
  std::vector<Idx> index_in(static_cast<std::size_t>(m->size()), -1);
  for (Idx i = 0; i < k; ++i) index_in[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])] = i;
  std::vector<std::string> names(static_cast<std::size_t>(k));
  std::vector<Idx> table(static_cast<std::size_t>(k) * k);
  for (Idx i = 0; i < k; ++i) {
    names[static_cast<std::size_t>(i)] = m->name(elems[static_cast<std::size_t>(i)]);
    for (Idx j = 0; j < k; ++j) {
      Idx join_parent = m->join(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
      Idx in_sub = index_in[static_cast<std::size_t>(join_parent)];
      if (in_sub < 0) throw PreconditionViolated("submodule: subset is not join-closed");
      table[static_cast<std::size_t>(i) * k + j] = in_sub;
    }
  }
  ModulePtr sub = BModule::make(std::move(names), std::move(table));
  return Submodule{m, sub, Morphism(sub, m, elems), elems, std::move(index_in)};
}

// ---- Congruences -----------------------------------------------------------------

Congruence Congruence::normalize(ModulePtr owner, const std::vector<Idx>& raw) {
  const Idx n = owner->size();
  std::vector<Idx> renumber(static_cast<std::size_t>(n), -1);
  std::vector<Idx> class_of(static_cast<std::size_t>(n));
  Idx next = 0;
  for (Idx x = 0; x < n; ++x) {
    Idx c = raw[static_cast<std::size_t>(x)];
    if (renumber[static_cast<std::size_t>(c)] < 0) renumber[static_cast<std::size_t>(c)] = next++;
    class_of[static_cast<std::size_t>(x)] = renumber[static_cast<std::size_t>(c)];
  }
  return Congruence(std::move(owner), std::move(class_of), next);
}

Congruence Congruence::discrete(ModulePtr m) {
  std::vector<Idx> cls(static_cast<std::size_t>(m->size()));
  std::iota(cls.begin(), cls.end(), 0);
  Idx n = m->size();
  return Congruence(std::move(m), std::move(cls), n);
}

Congruence Congruence::indiscrete(ModulePtr m) {
  std::vector<Idx> cls(static_cast<std::size_t>(m->size()), 0);
  return Congruence(std::move(m), std::move(cls), 1);
}

namespace {

struct UnionFind {
  std::vector<Idx> parent;
  explicit UnionFind(Idx n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Idx find(Idx x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(Idx a, Idx b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
};

}  // namespace

Congruence Congruence::generated(ModulePtr m, const std::vector<std::pair<Idx, Idx>>& seeds) {
  const Idx n = m->size();
  UnionFind uf(n);
  // Saturate under the rule: x ~ y  =>  x v z ~ y v z for every z.
  std::vector<std::pair<Idx, Idx>> work;
  for (auto [a, b] : seeds)
    if (uf.unite(a, b)) work.emplace_back(a, b);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (Idx z = 0; z < n; ++z) {
      Idx u = m->join(a, z), v = m->join(b, z);
      if (uf.unite(u, v)) work.emplace_back(u, v);
    }
  }
  std::vector<Idx> raw(static_cast<std::size_t>(n));
  for (Idx x = 0; x < n; ++x) raw[static_cast<std::size_t>(x)] = uf.find(x);
  return normalize(std::move(m), raw);
}

Congruence Congruence::from_classes(ModulePtr m, std::vector<Idx> class_of) {
  const Idx n = m->size();
  if (class_of.size() != static_cast<std::size_t>(n))
    throw PreconditionViolated("congruence: class vector has wrong length");
  for (Idx x = 0; x < n; ++x)
    for (Idx y = x + 1; y < n; ++y) {
      if (class_of[static_cast<std::size_t>(x)] != class_of[static_cast<std::size_t>(y)]) continue;
      for (Idx z = 0; z < n; ++z)
        if (class_of[static_cast<std::size_t>(m->join(x, z))] !=
            class_of[static_cast<std::size_t>(m->join(y, z))])
          throw PreconditionViolated("congruence: partition is not join-compatible");
    }
  return normalize(std::move(m), class_of);
}

Quotient quotient(const ModulePtr& m, const Congruence& c) {
  const Idx n = m->size(), k = c.class_count();
  std::vector<Idx> rep(static_cast<std::size_t>(k), -1);
  for (Idx x = 0; x < n; ++x)
    if (rep[static_cast<std::size_t>(c.class_of(x))] < 0) rep[static_cast<std::size_t>(c.class_of(x))] = x;
  std::vector<std::string> names(static_cast<std::size_t>(k));
  for (Idx i = 0; i < k; ++i) {
    std::string nm;
    for (Idx x = 0; x < n; ++x)
      if (c.class_of(x) == i) {
        if (!nm.empty()) nm += "~";
        nm += m->name(x);
      }
    names[static_cast<std::size_t>(i)] = nm;
  }
  std::vector<Idx> table(static_cast<std::size_t>(k) * k);
  for (Idx i = 0; i < k; ++i)
    for (Idx j = 0; j < k; ++j)
      table[static_cast<std::size_t>(i) * k + j] =
          c.class_of(m->join(rep[static_cast<std::size_t>(i)], rep[static_cast<std::size_t>(j)]));
  ModulePtr q = BModule::make(std::move(names), std::move(table));
  return Quotient{q, Morphism(m, q, c.classes()), c};
}

Submodule equalizer(const Morphism& f, const Morphism& g) {
  if (!f.dom()->same_structure(*g.dom()) || !f.cod()->same_structure(*g.cod()))
    throw DomainMismatch("equalizer: maps are not parallel");
  Mask members(static_cast<std::size_t>(f.dom()->size()), false);
  for (Idx x = 0; x < f.dom()->size(); ++x) members[static_cast<std::size_t>(x)] = (f(x) == g(x));
  return submodule(f.dom(), members);
}

Quotient coequalizer(const Morphism& f, const Morphism& g) {
  if (!f.dom()->same_structure(*g.dom()) || !f.cod()->same_structure(*g.cod()))
    throw DomainMismatch("coequalizer: maps are not parallel");
  std::vector<std::pair<Idx, Idx>> seeds;
  for (Idx x = 0; x < f.dom()->size(); ++x) seeds.emplace_back(f(x), g(x));
  return quotient(f.cod(), Congruence::generated(f.cod(), seeds));
}

// ---- Kernel pairs, images -----------------------------------------------------------

KernelPair kernel_pair(const Morphism& f) {
  Product sq = product(f.dom(), f.dom());
  Mask members(static_cast<std::size_t>(sq.module->size()), false);
  for (Idx x = 0; x < f.dom()->size(); ++x)
    for (Idx y = 0; y < f.dom()->size(); ++y)
      if (f(x) == f(y)) members[static_cast<std::size_t>(sq.pair_index(x, y))] = true;
  Submodule sub = submodule(sq.module, members);
  Morphism i1 = compose(sq.p1, sub.inclusion);
  Morphism i2 = compose(sq.p2, sub.inclusion);
  return KernelPair{std::move(sq), std::move(sub), std::move(i1), std::move(i2)};
}

Quotient coimage(const Morphism& f) {
  const Idx n = f.dom()->size();
  std::vector<std::pair<Idx, Idx>> seeds;
  for (Idx x = 0; x < n; ++x)
    for (Idx y = x + 1; y < n; ++y)
      if (f(x) == f(y)) seeds.emplace_back(x, y);
  return quotient(f.dom(), Congruence::generated(f.dom(), seeds));
}

CokernelPair cokernel_pair(const Morphism& f) {
  Product sq = product(f.cod(), f.cod());
  Morphism s1f = compose(sq.s1, f);
  Morphism s2f = compose(sq.s2, f);
  Quotient q = coequalizer(s1f, s2f);
  Morphism gamma1 = compose(q.projection, sq.s1);
  Morphism gamma2 = compose(q.projection, sq.s2);
  return CokernelPair{std::move(sq), std::move(q), std::move(gamma1), std::move(gamma2)};
}

Submodule image(const Morphism& f) {
  CokernelPair cp = cokernel_pair(f);
  return equalizer(cp.gamma1, cp.gamma2);
}

// ---- Separation / extension -----------------------------------------------------------

Ideal extend_functional(const Submodule& sub, const Ideal& phi) {
  const ModulePtr& m = sub.parent;
  if (!phi.owner->same_structure(*sub.module))
    throw DomainMismatch("extend_functional: functional does not live on the submodule");
  Mask members(static_cast<std::size_t>(m->size()), false);
  for (Idx y = 0; y < m->size(); ++y)
    for (Idx i = 0; i < sub.module->size(); ++i)
      if (phi.contains(i) && m->leq(y, sub.elems[static_cast<std::size_t>(i)])) {
        members[static_cast<std::size_t>(y)] = true;
        break;
      }
  // The extension is hereditary and join-closed by construction; its top
  // generates it as an interval.
  Idx gen = 0;
  for (Idx y = 0; y < m->size(); ++y)
    if (members[static_cast<std::size_t>(y)]) gen = m->join(gen, y);
  return Ideal{m, std::move(members), gen};
}

std::pair<Ideal, Ideal> separate(const ModulePtr& m, const Mask& submodule_members, Idx xi) {
  if (submodule_members[static_cast<std::size_t>(xi)])
    throw ElementInSubmodule("separate: element already lies in the submodule");
  Ideal phi = principal_ideal(m, xi);
  Mask f(static_cast<std::size_t>(m->size()), false);
  for (Idx alpha = 0; alpha < m->size(); ++alpha)
    for (Idx eta = 0; eta < m->size(); ++eta)
      if (submodule_members[static_cast<std::size_t>(eta)] && m->leq(alpha, eta) && m->leq(eta, xi)) {
        f[static_cast<std::size_t>(alpha)] = true;
        break;
      }
  f[0] = true;
  Idx gen = 0;
  for (Idx y = 0; y < m->size(); ++y)
    if (f[static_cast<std::size_t>(y)]) gen = m->join(gen, y);
  Ideal psi{m, std::move(f), gen};
  return {std::move(phi), std::move(psi)};
}

}  // namespace bmod
