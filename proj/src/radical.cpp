#include "bmod/radical.hpp"

namespace bmod {

namespace {

std::vector<Idx> coatom_like(const BModule& m) {
  // Elements maximal among the non-top ones.
  const Idx t = m.top();
  std::vector<Idx> out;
  for (Idx x = 0; x < m.size(); ++x) {
    if (x == t) continue;
    bool maximal = true;
    for (Idx y = 0; y < m.size(); ++y)
      if (y != t && y != x && m.leq(x, y)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<Ideal> maximal_ideals(const ModulePtr& m) {
  std::vector<Ideal> out;
  if (m->size() == 1) return out;
  for (Idx x : coatom_like(*m)) out.push_back(principal_ideal(m, x));
  std::sort(out.begin(), out.end(),
            [](const Ideal& a, const Ideal& b) { return mask_less(a.members, b.members); });
  return out;
}

Congruence radical(const ModulePtr& m) {
  const Idx n = m->size();
  auto maxi = maximal_ideals(m);
  // Group elements by their membership profile.
  std::vector<Idx> cls(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<bool>> profiles;
  std::vector<Idx> reps;
  for (Idx x = 0; x < n; ++x) {
    std::vector<bool> profile(maxi.size());
    for (std::size_t j = 0; j < maxi.size(); ++j) profile[j] = maxi[j].contains(x);
    bool found = false;
    for (std::size_t j = 0; j < profiles.size(); ++j)
      if (profiles[j] == profile) {
        cls[static_cast<std::size_t>(x)] = cls[static_cast<std::size_t>(reps[j])];
        found = true;
        break;
      }
    if (!found) {
      profiles.push_back(std::move(profile));
      reps.push_back(x);
      cls[static_cast<std::size_t>(x)] = static_cast<Idx>(profiles.size()) - 1;
    }
  }
  return Congruence::from_classes(m, cls);
}

bool radical_trivial(const ModulePtr& m) { return radical(m).is_equality(); }

bool dual_min_generated(const ModulePtr& m) {
  const Idx t = m->top();
  auto coatoms = coatom_like(*m);
  for (Idx x = 0; x < m->size(); ++x) {
    // meet of the maximal ideals containing [0,x]; empty meet is the top.
    Idx acc = t;
    for (Idx c : coatoms)
      if (m->leq(x, c)) acc = m->meet(acc, c);
    if (acc != x) return false;
  }
  return true;
}

bool is_injective_finite(const ModulePtr& m) {
  for (Idx x = 0; x < m->size(); ++x)
    for (Idx y = 0; y < m->size(); ++y)
      for (Idx z = 0; z < m->size(); ++z)
        if (m->meet(x, m->join(y, z)) != m->join(m->meet(x, y), m->meet(x, z))) return false;
  return true;
}

}  // namespace bmod
