#include "bmod/galois.hpp"

namespace bmod {

std::vector<Idx> galois_adjoint(const Morphism& f) {
  const BModule& dom = *f.dom();
  const BModule& cod = *f.cod();
  std::vector<Idx> g(static_cast<std::size_t>(cod.size()), 0);
  for (Idx y = 0; y < cod.size(); ++y) {
    Idx v = 0;
    for (Idx x = 0; x < dom.size(); ++x)
      if (cod.leq(f(x), y)) v = dom.join(v, x);
    g[static_cast<std::size_t>(y)] = v;
  }
  return g;
}

SupportDecomposition support_decomposition(const Morphism& f) {
  const ModulePtr& dom = f.dom();
  std::vector<Idx> g = galois_adjoint(f);
  auto closure = [&](Idx x) { return g[static_cast<std::size_t>(f(x))]; };
  Mask support(static_cast<std::size_t>(dom->size()), false);
  std::vector<Idx> elems;
  for (Idx x = 0; x < dom->size(); ++x)
    if (closure(x) == x) {
      support[static_cast<std::size_t>(x)] = true;
      elems.push_back(x);
    }
  const Idx k = static_cast<Idx>(elems.size());
  std::vector<Idx> index_in(static_cast<std::size_t>(dom->size()), -1);
  for (Idx i = 0; i < k; ++i) index_in[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])] = i;
  // Join in S is the closure of the ambient join.
  std::vector<std::string> names(static_cast<std::size_t>(k));
  std::vector<Idx> table(static_cast<std::size_t>(k) * k);
  for (Idx i = 0; i < k; ++i) {
    names[static_cast<std::size_t>(i)] = dom->name(elems[static_cast<std::size_t>(i)]);
    for (Idx j = 0; j < k; ++j) {
      Idx cj = closure(dom->join(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]));
      table[static_cast<std::size_t>(i) * k + j] = index_in[static_cast<std::size_t>(cj)];
    }
  }
  // Relabel so that the zero of S (= c(0)) sits at index 0.
  Idx zero_of_s = index_in[static_cast<std::size_t>(closure(0))];
  if (zero_of_s != 0) {
    std::vector<Idx> perm(static_cast<std::size_t>(k));
    for (Idx i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::swap(perm[0], perm[static_cast<std::size_t>(zero_of_s)]);
    std::vector<Idx> inv(static_cast<std::size_t>(k));
    for (Idx i = 0; i < k; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    std::vector<std::string> names2(static_cast<std::size_t>(k));
    std::vector<Idx> table2(static_cast<std::size_t>(k) * k);
    std::vector<Idx> elems2(static_cast<std::size_t>(k));
    for (Idx i = 0; i < k; ++i) {
      names2[static_cast<std::size_t>(i)] = names[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      elems2[static_cast<std::size_t>(i)] = elems[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      for (Idx j = 0; j < k; ++j)
        table2[static_cast<std::size_t>(i) * k + j] =
            inv[static_cast<std::size_t>(table[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]) * k +
                                               perm[static_cast<std::size_t>(j)]])];
    }
    names = std::move(names2);
    table = std::move(table2);
    elems = std::move(elems2);
    for (Idx i = 0; i < k; ++i) index_in[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])] = i;
  }
  ModulePtr s = BModule::make(std::move(names), std::move(table));
  std::vector<Idx> qmap(static_cast<std::size_t>(dom->size()));
  for (Idx x = 0; x < dom->size(); ++x)
    qmap[static_cast<std::size_t>(x)] = index_in[static_cast<std::size_t>(closure(x))];
  std::vector<Idx> injmap(static_cast<std::size_t>(k));
  for (Idx i = 0; i < k; ++i) injmap[static_cast<std::size_t>(i)] = f(elems[static_cast<std::size_t>(i)]);
  return SupportDecomposition{f,
                              std::move(support),
                              std::move(elems),
                              s,
                              Morphism(dom, s, std::move(qmap)),
                              Morphism(s, f.cod(), std::move(injmap)),
                              std::move(g)};
}

}  // namespace bmod
