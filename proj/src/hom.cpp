#include "bmod/hom.hpp"

#include <algorithm>
#include <tuple>

namespace bmod {

namespace {

// Linear extension of the irreducibles: sort by number of elements below, then
// by index, so every g[j] <= g[i] has j < i.
std::vector<Idx> ordered_irreducibles(const BModule& m) {
  std::vector<Idx> irr = m.join_irreducibles();
  std::vector<Idx> depth(irr.size(), 0);
  for (std::size_t i = 0; i < irr.size(); ++i)
    for (Idx y = 0; y < m.size(); ++y)
      if (m.leq(y, irr[i])) ++depth[i];
  std::vector<std::size_t> order(irr.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(depth[a], irr[a]) < std::tie(depth[b], irr[b]);
  });
  std::vector<Idx> out(irr.size());
  for (std::size_t i = 0; i < order.size(); ++i) out[i] = irr[order[i]];
  return out;
}

struct HomSearch {
  const BModule& dom;
  const BModule& cod;
  const SearchLimits& limits;
  std::vector<Idx> irr;
  std::vector<Idx> value;  // image of irr[i]
  std::uint64_t states = 0;
  std::vector<std::vector<Idx>> found;

  void run() {
    irr = ordered_irreducibles(dom);
    value.assign(irr.size(), -1);
    descend(0);
  }

  void descend(std::size_t i) {
    if (++states > limits.max_states)
      throw LimitExceeded("hom_set: search frontier exceeded the configured bound");
    if (i == irr.size()) {
      emit();
      return;
    }
    for (Idx v = 0; v < cod.size(); ++v) {
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
    if (is_morphism_map(dom, cod, map)) found.push_back(std::move(map));
  }
};

}  // namespace

std::vector<Morphism> hom_set(const ModulePtr& dom, const ModulePtr& cod,
                              const SearchLimits& limits) {
  HomSearch search{*dom, *cod, limits, {}, {}, 0, {}};
  search.run();
  std::sort(search.found.begin(), search.found.end());
  std::vector<Morphism> out;
  out.reserve(search.found.size());
  for (auto& map : search.found) out.emplace_back(dom, cod, std::move(map));
  return out;
}

std::vector<Morphism> automorphisms(const ModulePtr& m, const SearchLimits& limits) {
  std::vector<Morphism> out;
  for (const Morphism& f : hom_set(m, m, limits))
    if (f.is_injective() && f.is_surjective()) out.push_back(f);
  return out;
}

namespace {

struct Signature {
  Idx below, above, irreducible;
  bool operator==(const Signature&) const = default;
};

std::vector<Signature> signatures(const BModule& m) {
  std::vector<Signature> sig(static_cast<std::size_t>(m.size()));
  auto irr = m.join_irreducibles();
  for (Idx x = 0; x < m.size(); ++x) {
    Signature s{0, 0, 0};
    for (Idx y = 0; y < m.size(); ++y) {
      if (m.leq(y, x)) ++s.below;
      if (m.leq(x, y)) ++s.above;
    }
    s.irreducible = std::count(irr.begin(), irr.end(), x) ? 1 : 0;
    sig[static_cast<std::size_t>(x)] = s;
  }
  return sig;
}

bool iso_descend(const BModule& m, const BModule& n, const std::vector<Signature>& sm,
                 const std::vector<Signature>& sn, std::vector<Idx>& map, std::vector<bool>& used,
                 Idx x) {
  if (x == m.size()) return true;
  for (Idx v = 0; v < n.size(); ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    if (!(sm[static_cast<std::size_t>(x)] == sn[static_cast<std::size_t>(v)])) continue;
    bool ok = true;
    for (Idx y = 0; y < x && ok; ++y) {
      Idx j = m.join(x, y);
      Idx expected = -1;
      if (j < x)
        expected = map[static_cast<std::size_t>(j)];
      else if (j == x)
        expected = v;
      if (expected >= 0 && n.join(v, map[static_cast<std::size_t>(y)]) != expected) ok = false;
      if (ok && m.leq(y, x) != n.leq(map[static_cast<std::size_t>(y)], v)) ok = false;
      if (ok && m.leq(x, y) != n.leq(v, map[static_cast<std::size_t>(y)])) ok = false;
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(x)] = v;
    used[static_cast<std::size_t>(v)] = true;
    if (iso_descend(m, n, sm, sn, map, used, x + 1)) return true;
    used[static_cast<std::size_t>(v)] = false;
    map[static_cast<std::size_t>(x)] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Idx>> find_isomorphism(const ModulePtr& m, const ModulePtr& n) {
  if (m->size() != n->size()) return std::nullopt;
  auto sm = signatures(*m), sn = signatures(*n);
  {
    auto a = sm;
    auto b = sn;
    auto key = [](const Signature& s) { return std::tie(s.below, s.above, s.irreducible); };
    auto lt = [&](const Signature& x, const Signature& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    if (!(a == b)) return std::nullopt;
  }
  std::vector<Idx> map(static_cast<std::size_t>(m->size()), -1);
  std::vector<bool> used(static_cast<std::size_t>(n->size()), false);
  if (!iso_descend(*m, *n, sm, sn, map, used, 0)) return std::nullopt;
  // Full check: the candidate respected order and partial joins; confirm it is
  // a join isomorphism.
  if (!is_morphism_map(*m, *n, map)) return std::nullopt;
  return map;
}

bool isomorphic(const ModulePtr& m, const ModulePtr& n) { return find_isomorphism(m, n).has_value(); }

}  // namespace bmod
