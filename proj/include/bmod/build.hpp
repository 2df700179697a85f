#pragma once

#include <algorithm>
#include <string>

#include "bmod/inv.hpp"
#include "bmod/module.hpp"

// Small stock constructions used by the worked examples, the CLI and the tests.

namespace bmod::build {

inline ModulePtr chain(Idx k) {
  std::vector<std::string> names(static_cast<std::size_t>(k));
  std::vector<Idx> table(static_cast<std::size_t>(k) * k);
  for (Idx i = 0; i < k; ++i) {
    names[static_cast<std::size_t>(i)] = "c" + std::to_string(i);
    for (Idx j = 0; j < k; ++j) table[static_cast<std::size_t>(i) * k + j] = std::max(i, j);
  }
  return BModule::make(std::move(names), std::move(table));
}

// B^k: subsets of k letters under union; element index = bitmask.
inline ModulePtr boolean_module(Idx k) {
  const Idx n = 1 << k;
  std::vector<std::string> names(static_cast<std::size_t>(n));
  std::vector<Idx> table(static_cast<std::size_t>(n) * n);
  for (Idx i = 0; i < n; ++i) {
    std::string nm;
    for (Idx b = 0; b < k; ++b)
      if (i & (1 << b)) nm += static_cast<char>('a' + b);
    names[static_cast<std::size_t>(i)] = nm.empty() ? "0" : nm;
    for (Idx j = 0; j < n; ++j) table[static_cast<std::size_t>(i) * n + j] = i | j;
  }
  return BModule::make(std::move(names), std::move(table));
}

inline ModulePtr bool_b() { return boolean_module(1); }

// X v X: two copies of X glued at 0 with a fresh top t; non-zero elements of
// different copies join to t.  The involution swapping the copies makes it an
// object of Bmod^s whose only null elements are 0 and t.
inline InvPtr wedge_double(const ModulePtr& x) {
  const Idx k = x->size() - 1;  // non-zero elements per copy
  const Idx n = 2 * k + 2;      // 0, copy 1, copy 2, top
  const Idx t = n - 1;
  auto first = [&](Idx i) { return 1 + (i - 1); };       // x index (>=1) -> carrier
  auto second = [&](Idx i) { return 1 + k + (i - 1); };  // second copy
  std::vector<std::string> names(static_cast<std::size_t>(n));
  names[0] = "0";
  names[static_cast<std::size_t>(t)] = "t";
  for (Idx i = 1; i < x->size(); ++i) {
    names[static_cast<std::size_t>(first(i))] = x->name(i);
    names[static_cast<std::size_t>(second(i))] = x->name(i) + "'";
  }
  auto side = [&](Idx a) { return a == 0 ? 0 : (a == t ? 3 : (a <= k ? 1 : 2)); };
  auto in_x = [&](Idx a) { return side(a) == 1 ? a : a - k; };  // carrier -> x index
  std::vector<Idx> table(static_cast<std::size_t>(n) * n);
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) {
      Idx v;
      if (a == 0) v = b;
      else if (b == 0) v = a;
      else if (a == t || b == t) v = t;
      else if (side(a) != side(b)) v = t;
      else {
        Idx j = x->join(in_x(a), in_x(b));
        v = side(a) == 1 ? first(j) : second(j);
      }
      table[static_cast<std::size_t>(a) * n + b] = v;
    }
  ModulePtr base = BModule::make(std::move(names), std::move(table));
  std::vector<Idx> sigma(static_cast<std::size_t>(n));
  sigma[0] = 0;
  sigma[static_cast<std::size_t>(t)] = t;
  for (Idx i = 1; i < x->size(); ++i) {
    sigma[static_cast<std::size_t>(first(i))] = second(i);
    sigma[static_cast<std::size_t>(second(i))] = first(i);
  }
  return make_inv(std::move(base), std::move(sigma));
}

// The maximal functional of X extended to the wedge: both copies collapse to
// the corresponding copy of B inside sB.
inline InvMorphism wedge_mu(const InvPtr& wx, const SFunctor& sb) {
  const Idx n = wx->size();
  const Idx t = n - 1;
  const Idx k = (n - 2) / 2;
  std::vector<Idx> map(static_cast<std::size_t>(n));
  map[0] = sb.embed(0, 0);
  map[static_cast<std::size_t>(t)] = sb.embed(1, 1);
  for (Idx a = 1; a < t; ++a) map[static_cast<std::size_t>(a)] = a <= k ? sb.embed(1, 0) : sb.embed(0, 1);
  return InvMorphism(wx, sb.object, std::move(map));
}

// Generators a,b,c,d with a+b = c+d as the only relation; sigma swaps a,b and
// c,d.  Ten elements.
inline InvPtr object_r() {
  // 0 a b c d ac ad bc bd T     (T = a+b = c+d = any triple)
  enum { O, A, Bq, C, D, AC, AD, BC, BD, T, N };
  std::vector<std::string> names = {"0", "a", "b", "c", "d", "ac", "ad", "bc", "bd", "T"};
  auto atoms = [&](Idx e) -> std::vector<Idx> {
    switch (e) {
      case O: return {};
      case A: return {0};
      case Bq: return {1};
      case C: return {2};
      case D: return {3};
      case AC: return {0, 2};
      case AD: return {0, 3};
      case BC: return {1, 2};
      case BD: return {1, 3};
      default: return {0, 1, 2, 3};
    }
  };
  auto from_atoms = [&](std::vector<bool> s) -> Idx {
    int c = static_cast<int>(std::count(s.begin(), s.end(), true));
    if (c == 0) return O;
    if (c == 1) return s[0] ? A : s[1] ? Bq : s[2] ? C : D;
    if (c == 2) {
      if (s[0] && s[2]) return AC;
      if (s[0] && s[3]) return AD;
      if (s[1] && s[2]) return BC;
      if (s[1] && s[3]) return BD;
      return T;  // ab or cd
    }
    return T;
  };
  std::vector<Idx> table(static_cast<std::size_t>(N) * N);
  for (Idx e = 0; e < N; ++e)
    for (Idx f = 0; f < N; ++f) {
      std::vector<bool> s(4, false);
      for (Idx x : atoms(e)) s[static_cast<std::size_t>(x)] = true;
      for (Idx x : atoms(f)) s[static_cast<std::size_t>(x)] = true;
      table[static_cast<std::size_t>(e) * N + f] = from_atoms(s);
    }
  ModulePtr base = BModule::make(std::move(names), std::move(table));
  // sigma: a<->b, c<->d.
  std::vector<Idx> sigma = {O, Bq, A, D, C, BD, BC, AD, AC, T};
  return make_inv(std::move(base), std::move(sigma));
}

// R with the further relation a+d = b+c = a+b: the pairs ad and bc collapse
// into the top.  Eight elements.
inline InvPtr object_r_prime() {
  enum { O, A, Bq, C, D, AC, BD, T, N };
  std::vector<std::string> names = {"0", "a", "b", "c", "d", "ac", "bd", "T"};
  auto from_atoms = [&](std::vector<bool> s) -> Idx {
    int c = static_cast<int>(std::count(s.begin(), s.end(), true));
    if (c == 0) return O;
    if (c == 1) return s[0] ? A : s[1] ? Bq : s[2] ? C : D;
    if (c == 2) {
      if (s[0] && s[2]) return AC;
      if (s[1] && s[3]) return BD;
      return T;  // ab, cd, ad, bc
    }
    return T;
  };
  auto atoms = [&](Idx e) -> std::vector<Idx> {
    switch (e) {
      case O: return {};
      case A: return {0};
      case Bq: return {1};
      case C: return {2};
      case D: return {3};
      case AC: return {0, 2};
      case BD: return {1, 3};
      default: return {0, 1, 2, 3};
    }
  };
  std::vector<Idx> table(static_cast<std::size_t>(N) * N);
  for (Idx e = 0; e < N; ++e)
    for (Idx f = 0; f < N; ++f) {
      std::vector<bool> s(4, false);
      for (Idx x : atoms(e)) s[static_cast<std::size_t>(x)] = true;
      for (Idx x : atoms(f)) s[static_cast<std::size_t>(x)] = true;
      table[static_cast<std::size_t>(e) * N + f] = from_atoms(s);
    }
  ModulePtr base = BModule::make(std::move(names), std::move(table));
  std::vector<Idx> sigma = {O, Bq, A, D, C, BD, AC, T};
  return make_inv(std::move(base), std::move(sigma));
}

}  // namespace bmod::build
