#include "bmod/enumerate.hpp"

#include <algorithm>

#include "bmod/build.hpp"
#include "bmod/hom.hpp"

namespace bmod {

namespace {

// Enumerate partial orders on {0..n-1} with 0 least in which every pair has a
// least upper bound; emit the induced join tables.
void emit_modules(Idx n, std::vector<ModulePtr>& out) {
  const Idx pairs = n * n;
  // leq as a bitset over ordered pairs; iterate over all subsets of the
  // strictly-upper part.  n <= 4 keeps this to 2^12 candidates.
  std::vector<std::pair<Idx, Idx>> free_pairs;
  for (Idx x = 1; x < n; ++x)
    for (Idx y = 1; y < n; ++y)
      if (x != y) free_pairs.emplace_back(x, y);
  std::vector<bool> leq(static_cast<std::size_t>(pairs), false);
  auto at = [&](Idx x, Idx y) -> std::vector<bool>::reference {
    return leq[static_cast<std::size_t>(x * n + y)];
  };
  for (std::uint64_t bits = 0; bits < (1ull << free_pairs.size()); ++bits) {
    std::fill(leq.begin(), leq.end(), false);
    for (Idx x = 0; x < n; ++x) {
      at(x, x) = true;
      at(0, x) = true;
    }
    for (std::size_t i = 0; i < free_pairs.size(); ++i)
      if (bits & (1ull << i)) at(free_pairs[i].first, free_pairs[i].second) = true;
    // antisymmetry and transitivity
    bool ok = true;
    for (Idx x = 1; x < n && ok; ++x)
      for (Idx y = 1; y < n && ok; ++y)
        if (x != y && at(x, y) && at(y, x)) ok = false;
    for (Idx x = 0; x < n && ok; ++x)
      for (Idx y = 0; y < n && ok; ++y)
        for (Idx z = 0; z < n && ok; ++z)
          if (at(x, y) && at(y, z) && !at(x, z)) ok = false;
    if (!ok) continue;
    // joins must exist
    std::vector<Idx> table(static_cast<std::size_t>(pairs));
    for (Idx x = 0; x < n && ok; ++x)
      for (Idx y = 0; y < n && ok; ++y) {
        Idx lub = -1;
        for (Idx z = 0; z < n; ++z) {
          if (!at(x, z) || !at(y, z)) continue;
          bool least = true;
          for (Idx w = 0; w < n; ++w)
            if (at(x, w) && at(y, w) && !at(z, w)) least = false;
          if (least) {
            lub = z;
            break;
          }
        }
        if (lub < 0) {
          ok = false;
        } else {
          table[static_cast<std::size_t>(x * n + y)] = lub;
        }
      }
    if (!ok) continue;
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (Idx i = 0; i < n; ++i) names[static_cast<std::size_t>(i)] = "e" + std::to_string(i);
    out.push_back(BModule::make(std::move(names), std::move(table)));
  }
}

}  // namespace

std::vector<ModulePtr> modules_up_to_iso(Idx n) {
  std::vector<ModulePtr> labeled;
  emit_modules(n, labeled);
  std::vector<ModulePtr> reps;
  for (const ModulePtr& m : labeled) {
    bool fresh = true;
    for (const ModulePtr& r : reps)
      if (isomorphic(m, r)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(m);
  }
  return reps;
}

std::vector<std::vector<Idx>> involutions(const ModulePtr& m) {
  std::vector<std::vector<Idx>> out;
  for (const Morphism& a : automorphisms(m)) {
    bool order_two = true;
    for (Idx x = 0; x < m->size(); ++x)
      if (a(a(x)) != x) order_two = false;
    if (order_two) out.push_back(a.map());
  }
  return out;
}

std::vector<InvPtr> inv_modules_up_to_iso(Idx n) {
  std::vector<InvPtr> out;
  for (Idx k = 1; k <= n; ++k)
    for (const ModulePtr& m : modules_up_to_iso(k))
      for (const std::vector<Idx>& s : involutions(m)) {
        InvPtr e = make_inv(m, s);
        bool fresh = true;
        for (const InvPtr& r : out)
          if (inv_isomorphic(e, r)) {
            fresh = false;
            break;
          }
        if (fresh) out.push_back(e);
      }
  return out;
}

std::uint64_t SplitMix::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix::below(std::uint64_t bound) { return bound ? next() % bound : 0; }

ModulePtr sample_module(SplitMix& rng, Idx size, int tries) {
  for (int t = 0; t < tries; ++t) {
    const Idx k = 4 + static_cast<Idx>(rng.below(2));  // ambient B^4 or B^5
    const Idx ambient = 1 << k;
    Mask members(static_cast<std::size_t>(ambient), false);
    members[0] = true;
    Idx seeds = size;
    for (Idx i = 0; i < seeds; ++i)
      members[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(ambient)))] = true;
    // close under union
    bool changed = true;
    while (changed) {
      changed = false;
      auto elems = mask_to_list(members);
      for (Idx a : elems)
        for (Idx b : elems)
          if (!members[static_cast<std::size_t>(a | b)]) {
            members[static_cast<std::size_t>(a | b)] = true;
            changed = true;
          }
    }
    if (mask_count(members) != static_cast<std::size_t>(size)) continue;
    auto elems = mask_to_list(members);
    std::vector<Idx> index_in(static_cast<std::size_t>(ambient), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) index_in[static_cast<std::size_t>(elems[i])] = static_cast<Idx>(i);
    std::vector<std::string> names(elems.size());
    std::vector<Idx> table(elems.size() * elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      names[i] = "s" + std::to_string(i);
      for (std::size_t j = 0; j < elems.size(); ++j)
        table[i * elems.size() + j] = index_in[static_cast<std::size_t>(elems[i] | elems[j])];
    }
    return BModule::make(std::move(names), std::move(table));
  }
  return nullptr;
}

}  // namespace bmod
