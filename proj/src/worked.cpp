#include "bmod/worked.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

#include "bmod/build.hpp"
#include "bmod/galois.hpp"
#include "bmod/pair.hpp"
#include "bmod/radical.hpp"

namespace bmod {

namespace {

template <typename T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void claim(Report& r, const std::string& name, const std::string& expected, const std::string& got) {
  r.claims.push_back(Claim{name, expected, got, expected == got, r.current_group});
}

template <typename T>
void claim_eq(Report& r, const std::string& name, const T& expected, const T& got) {
  claim(r, name, show(expected), show(got));
}

void claim_true(Report& r, const std::string& name, bool got) {
  claim(r, name, "true", got ? "true" : "false");
}

// ---- Diagonal example ------------------------------------------------------------

// Atom masks over {alpha, beta, gamma, delta} = bits 0..3.
struct DiagonalSetup {
  SFunctor sb;    // s(B)
  SFunctor sb2;   // s(B^2) = B^2 x B^2
  InvQuotient q;  // cokernel of s(Delta)
  InvSub k;       // kernel of the cokernel
  ShortDoublyExact alpha;

  Idx elem_of_mask(int m) const {
    return sb2.embed((m & 1 ? 1 : 0) | (m & 2 ? 2 : 0),
                     ((m >> 2) & 1 ? 1 : 0) | ((m >> 2) & 2 ? 2 : 0));
  }
  int mask_of_elem(Idx e) const {
    auto [u, v] = sb2.unembed(e);
    return u | (v << 2);
  }
  Idx q_of_mask(int m) const { return q.projection(elem_of_mask(m)); }
  // canonical representative mask of a class of Q
  int rep_mask(Idx qidx) const {
    int best = -1;
    for (Idx e = 0; e < sb2.object->size(); ++e)
      if (q.projection(e) == qidx) {
        int m = mask_of_elem(e);
        if (best < 0 || m < best) best = m;
      }
    return best;
  }
};

DiagonalSetup diagonal_setup() {
  DiagonalSetup d{s_functor(build::bool_b()), s_functor(build::boolean_module(2)),
                  InvQuotient{nullptr, inv_identity(zero_inv())},
                  InvSub{nullptr, {}, nullptr, inv_identity(zero_inv()), {}, {}},
                  ShortDoublyExact{nullptr, nullptr, nullptr, inv_identity(zero_inv()),
                                   inv_identity(zero_inv())}};
  Morphism delta(build::bool_b(), build::boolean_module(2), {0, 3});
  InvMorphism sdelta = s_of(d.sb, d.sb2, delta);
  d.q = inv_cokernel(sdelta);
  d.k = inv_kernel(d.q.projection);
  SdesReport rep = validate_sdes(d.k.inclusion, d.q.projection);
  d.alpha = rep.seq;
  return d;
}

using PairMaskList = std::vector<std::pair<int, int>>;

const PairMaskList kListAlphaGamma = {{0, 5}, {1, 4},  {1, 5}, {4, 1}, {4, 5},
                                      {5, 0}, {5, 1},  {5, 4}, {5, 5}};
const PairMaskList kListBetaDelta = {{0, 10}, {2, 8},  {2, 10}, {8, 2},  {8, 10},
                                     {10, 0}, {10, 2}, {10, 8}, {10, 10}};
const PairMaskList kLiftable23 = {
    {0, 3},  {1, 3},  {2, 3}, {4, 3},  {8, 3},  {3, 0},  {3, 1},  {3, 2},
    {3, 4},  {3, 8},  {3, 3}, {3, 5},  {3, 9},  {3, 6},  {3, 10}, {5, 3},
    {5, 10}, {9, 3},  {9, 6}, {6, 3},  {6, 9},  {10, 3}, {10, 5}};
const PairMaskList kComplementC = {{1, 2},  {1, 10}, {2, 1},  {2, 5},  {4, 8},  {4, 10},
                                   {8, 4},  {8, 5},  {5, 2},  {5, 8},  {10, 1}, {10, 4}};

// the 19 endomorphisms of K with several extensions, as value triples on
// (alpha+beta, alpha+gamma, beta+delta)
const std::vector<std::array<int, 3>> kAmbiguous19 = {
    {5, 5, 5},    {10, 10, 10}, {7, 5, 15},   {7, 15, 5},   {7, 15, 15},
    {11, 10, 15}, {11, 15, 10}, {11, 15, 15}, {13, 5, 15},  {13, 15, 5},
    {13, 15, 15}, {14, 10, 15}, {14, 15, 10}, {14, 15, 15}, {15, 5, 15},
    {15, 10, 15}, {15, 15, 5},  {15, 15, 10}, {15, 15, 15}};

// the 28 dual forms: rows = the 16 null endomorphisms then the 12 elements of
// C, columns = the forms; entry = p1 of the form's value on the row.
const std::vector<std::pair<int, int>> kMatrixRows = {
    {0, 0},  {0, 3},  {0, 5},  {0, 10}, {3, 0},  {3, 3},  {3, 5},  {3, 10},
    {5, 0},  {5, 3},  {5, 5},  {5, 10}, {10, 0}, {10, 3}, {10, 5}, {10, 10},
    {1, 2},  {1, 10}, {2, 1},  {2, 5},  {4, 8},  {4, 10}, {8, 4},  {8, 5},
    {5, 2},  {5, 8},  {10, 1}, {10, 4}};
const std::vector<std::string> kMatrixByRow = {
    "0000000000000000000000000000",  // (0,0)
    "0000111111111111111111111111",  // (0,ab)
    "0000000000111111111111111111",  // (0,ag)
    "0000111111000000111111111111",  // (0,bd)
    "0111011111011111011111111111",  // (ab,0)
    "0111111111111111111111111111",  // (ab,ab)
    "0111011111111111111111111111",  // (ab,ag)
    "0111111111011111111111111111",  // (ab,bd)
    "0011001111001111000011111111",  // (ag,0)
    "0011111111111111111111111111",  // (ag,ab)
    "0011001111111111111111111111",  // (ag,ag)
    "0011111111001111111111111111",  // (ag,bd)
    "0101010111010111011100011111",  // (bd,0)
    "0101111111111111111111111111",  // (bd,ab)
    "0101010111111111111111111111",  // (bd,ag)
    "0101111111010111111111111111",  // (bd,bd)
    "0011111111001011101111101111",  // (a,b)
    "0011111111001011111111111111",  // (a,bd)
    "0101010011111111111101110111",  // (b,a)
    "0101010011111111111111111111",  // (b,ag)
    "0011111111001101110111111011",  // (g,d)
    "0011111111001101111111111111",  // (g,bd)
    "0101010101111111111110111101",  // (d,g)
    "0101010101111111111111111111",  // (d,ag)
    "0011111111001111101111111111",  // (ag,b)
    "0011111111001111110111111111",  // (ag,d)
    "0101010111111111111101111111",  // (bd,a)
    "0101010111111111111110111111",  // (bd,g)
};

std::string pair_list_str(PairMaskList l) {
  std::sort(l.begin(), l.end());
  std::ostringstream os;
  for (auto [a, b] : l) os << "(" << a << "," << b << ")";
  return os.str();
}

}  // namespace

Report diagonal_example(const SearchLimits& limits) {
  Report r{"diagonal example", {}};
  DiagonalSetup d = diagonal_setup();
  const InvPtr& qobj = d.q.object;
  const InvPtr& kobj = d.k.module;

  r.current_group = 1;
  claim_eq(r, "|Q| (cokernel of the squared diagonal)", 10, qobj->size());
  claim_eq<std::size_t>(r, "|Q^sigma|", 4, mask_count(qobj->fixed_mask()));
  claim_eq<std::size_t>(r, "|K| (kernel of the cokernel)", 10, mask_count(d.k.members));
  claim_true(r, "K is isomorphic to Q* in Bmod^s", inv_isomorphic(kobj, dual_inv(qobj).object));
  {
    // the intersection of K with the gamma/delta-free part is the diagonal {0, ab}
    int count = 0;
    for (Idx e = 0; e < d.sb2.object->size(); ++e)
      if (d.k.members[static_cast<std::size_t>(e)] && (d.mask_of_elem(e) & 12) == 0) ++count;
    claim_eq(r, "K meets the gamma/delta-free part in the diagonal", 2, count);
    bool fixed_iso = true;
    try {
      fixed_coker_iso(d.sb2.object, d.k.members);
    } catch (const Error&) {
      fixed_iso = false;
    }
    claim_true(r, "fixed points of B^2 x B^2 match the fixed points of Q", fixed_iso);
  }

  // endomorphisms of Q
  r.current_group = 2;
  HomObject endq = hom_object(qobj, qobj, limits);
  claim_eq<std::size_t>(r, "|End(Q)|", 70, endq.elements.size());
  const Idx q_alpha = d.q_of_mask(1), q_beta = d.q_of_mask(2);
  auto endo_pair = [&](const InvMorphism& h) {
    return std::make_pair(d.rep_mask(h(q_alpha)), d.rep_mask(h(q_beta)));
  };
  auto collect = [&](int sum_mask) {
    PairMaskList out;
    Idx target = d.q_of_mask(sum_mask);
    for (const InvMorphism& h : endq.elements)
      if (qobj->join(h(q_alpha), h(q_beta)) == target) out.push_back(endo_pair(h));
    std::sort(out.begin(), out.end());
    return out;
  };
  claim_eq(r, "list L_{alpha,gamma}", pair_list_str(kListAlphaGamma), pair_list_str(collect(5)));
  claim_eq(r, "list L_{beta,delta}", pair_list_str(kListBetaDelta), pair_list_str(collect(10)));
  PairMaskList sum_ab = collect(3);
  claim_eq<std::size_t>(r, "endomorphisms with psi(a)+psi(b) = a+b", 51, sum_ab.size());

  // liftability through Hom(Q, B^2 x B^2)
  FunctorF F(qobj, limits);
  const HomObject& homq_b4 = F.at(d.sb2.object);
  claim_eq<std::size_t>(r, "|Hom(Q, B^2 x B^2)| = |Q*|^2", 100, homq_b4.elements.size());
  InvMorphism f_cok = F.map(d.q.projection);
  Mask range = f_cok.range();
  claim_eq<std::size_t>(r, "|Range(F(cok))| = 1+9+9+23", 42, mask_count(range));
  PairMaskList liftable_ab;
  for (std::size_t i = 0; i < endq.elements.size(); ++i) {
    if (!range[i]) continue;
    const InvMorphism& h = endq.elements[i];
    if (qobj->join(h(q_alpha), h(q_beta)) == d.q_of_mask(3)) liftable_ab.push_back(endo_pair(h));
  }
  claim_eq(r, "the 23 liftable endomorphisms with sum a+b", pair_list_str(kLiftable23),
           pair_list_str(liftable_ab));
  {
    // liftable = sums of the two lists (with zero adjoined)
    std::set<std::vector<Idx>> sums;
    std::vector<Idx> l1, l2;
    l1.push_back(endq.index_of(inv_zero(qobj, qobj).map()));
    l2 = l1;
    for (const InvMorphism& h : endq.elements) {
      Idx s = qobj->join(h(q_alpha), h(q_beta));
      if (s == d.q_of_mask(5)) l1.push_back(endq.index_of(h.map()));
      if (s == d.q_of_mask(10)) l2.push_back(endq.index_of(h.map()));
    }
    for (Idx a : l1)
      for (Idx b : l2)
        sums.insert(endq.elements[static_cast<std::size_t>(endq.object->join(a, b))].map());
    std::set<std::vector<Idx>> range_maps;
    for (std::size_t i = 0; i < endq.elements.size(); ++i)
      if (range[i]) range_maps.insert(endq.elements[i].map());
    claim_true(r, "liftable = sums of the two lists", sums == range_maps);
  }

  // the cokernel of F(alpha'')
  r.current_group = 3;
  CokerF cf = coker_F(d.alpha, F);
  claim_eq(r, "|Coker(F(alpha''))|", 28, cf.coker.object->size());
  claim_eq<std::size_t>(r, "null elements of the cokernel", 16,
                        mask_count(cf.coker.object->fixed_mask()));
  {
    PairMaskList nonnull;
    for (std::size_t i = 0; i < cf.f_right.elements.size(); ++i)
      if (!cf.coker.object->is_fixed(cf.coker.projection(static_cast<Idx>(i))))
        nonnull.push_back(endo_pair(cf.f_right.elements[i]));
    claim_eq(r, "the list C of non-null classes", pair_list_str(kComplementC),
             pair_list_str(nonnull));
    claim_true(r, "d maps the class of Id_Q to a non-null element", [&] {
      Idx id_idx = cf.f_right.index_of(inv_identity(qobj).map());
      return !cf.coker.object->is_fixed(cf.coker.projection(id_idx));
    }());
  }

  // the 28 dual forms vanishing on the normal image
  {
    Mask imbar = normal_image_of_morphism(cf.f_map);
    std::vector<Idx> forms;
    for (Idx u = 0; u < endq.object->size(); ++u) {
      bool ok = true;
      for (Idx x = 0; x < endq.object->size() && ok; ++x)
        if (imbar[static_cast<std::size_t>(x)] && !pairing_null(*endq.object, x, u)) ok = false;
      if (ok) forms.push_back(u);
    }
    claim_eq<std::size_t>(r, "dual forms annihilating the normal image", 28, forms.size());
    // regenerate the matrix column-for-column up to canonical ordering
    std::vector<Idx> row_elems;
    for (auto [ma, mb] : kMatrixRows) {
      bool found = false;
      for (std::size_t i = 0; i < endq.elements.size() && !found; ++i) {
        const InvMorphism& h = endq.elements[i];
        if (h(q_alpha) == d.q_of_mask(ma) && h(q_beta) == d.q_of_mask(mb)) {
          row_elems.push_back(static_cast<Idx>(i));
          found = true;
        }
      }
      if (!found) row_elems.push_back(-1);
    }
    bool rows_resolved = std::count(row_elems.begin(), row_elems.end(), -1) == 0;
    claim_true(r, "all 28 matrix rows resolve to endomorphisms", rows_resolved);
    if (rows_resolved) {
      std::vector<std::string> got_columns;
      for (Idx u : forms) {
        std::string col;
        for (Idx row : row_elems) col += endq.object->leq(row, u) ? '0' : '1';
        got_columns.push_back(std::move(col));
      }
      std::vector<std::string> want_columns;
      for (std::size_t c = 0; c < 28; ++c) {
        std::string col;
        for (std::size_t row = 0; row < 28; ++row) col += kMatrixByRow[row][c];
        want_columns.push_back(std::move(col));
      }
      std::sort(got_columns.begin(), got_columns.end());
      std::sort(want_columns.begin(), want_columns.end());
      claim_true(r, "the form matrix matches column-for-column", got_columns == want_columns);
    }
  }

  // the res/quot correspondence over the sequence alpha
  r.current_group = 4;
  {
    auto endk = inv_hom_set(kobj, kobj, limits);
    claim_eq<std::size_t>(r, "|End(K)|", 70, endk.size());
    Idx univalent = 0;
    std::vector<std::array<int, 3>> ambiguous;
    Idx with7 = 0;
    Idx big_extensions = -1, big_induced = -1;
    bool null_agreement = true;       // all induced maps agree on null elements
    bool ambiguous_in_imbar = true;   // induced maps of ambiguous fans lie in Im-bar
    bool pairwise_null = true;        // t1(u) + sigma(t2(u)) is null for paired actions
    auto k_elem_mask = [&](Idx kidx) { return d.mask_of_elem(d.k.elems[static_cast<std::size_t>(kidx)]); };
    Idx i3 = d.k.index_in[static_cast<std::size_t>(d.elem_of_mask(3))];
    Idx i5 = d.k.index_in[static_cast<std::size_t>(d.elem_of_mask(5))];
    Idx i10 = d.k.index_in[static_cast<std::size_t>(d.elem_of_mask(10))];
    CokerF cf2 = coker_F(d.alpha, F);
    Mask imbar_f = normal_image_of_morphism(cf2.f_map);
    for (const InvMorphism& v : endk) {
      ExtensionFan fan = extension_fan(d.alpha, d.alpha, v, limits);
      for (const InvMorphism& wpp : fan.induced)
        for (Idx x = 0; x < qobj->size(); ++x)
          if (qobj->is_fixed(x) && wpp(x) != fan.induced.front()(x)) null_agreement = false;
      if (fan.induced.size() == 1) ++univalent;
      if (fan.extensions.size() > 1) {
        ambiguous.push_back({k_elem_mask(v(i3)), k_elem_mask(v(i5)), k_elem_mask(v(i10))});
        if (fan.extensions.size() == 7) ++with7;
        if (fan.extensions.size() == 49) {
          big_extensions = static_cast<Idx>(fan.extensions.size());
          big_induced = static_cast<Idx>(fan.induced.size());
        }
        for (const InvMorphism& wpp : fan.induced)
          if (!imbar_f[static_cast<std::size_t>(endq.index_of(wpp.map()))])
            ambiguous_in_imbar = false;
        for (const InvMorphism& w1 : fan.induced)
          for (const InvMorphism& w2 : fan.induced) {
            auto t1 = induced_coker_action(w1, cf2, cf2, F);
            auto t2 = induced_coker_action(w2, cf2, cf2, F);
            for (Idx u = 0; u < cf2.coker.object->size(); ++u) {
              Idx mix = cf2.coker.object->join(
                  t1[static_cast<std::size_t>(u)],
                  cf2.coker.object->sigma(t2[static_cast<std::size_t>(u)]));
              if (!cf2.coker.object->is_fixed(mix)) pairwise_null = false;
            }
          }
      }
    }
    claim_true(r, "all extensions of one v agree on null elements", null_agreement);
    claim_true(r, "ambiguous fans induce maps inside the normal image", ambiguous_in_imbar);
    claim_true(r, "paired actions mix to null values", pairwise_null);
    claim_eq(r, "univalent endomorphisms of K", 51, univalent);
    claim_eq<std::size_t>(r, "ambiguous endomorphisms of K", 19, ambiguous.size());
    claim_eq(r, "ambiguous endomorphisms with 7 extensions", 18, with7);
    claim_eq(r, "the top endomorphism has 49 extensions", 49, big_extensions);
    claim_eq(r, "the 49 extensions induce 7 distinct maps", 7, big_induced);
    auto want = kAmbiguous19;
    std::sort(want.begin(), want.end());
    std::sort(ambiguous.begin(), ambiguous.end());
    claim_true(r, "the 19 ambiguous triples match the list", ambiguous == want);
  }

  // condition (a), the satellite value and the induced action
  {
    SatelliteResult sf = satellite_eval(F, kobj, d.alpha, limits);
    claim_true(r, "condition (a) holds for all endomorphisms of K", sf.actions.holds);
    claim_true(r, "SF(K) is not null", !sf.value.coker.object->is_null_object());
    claim_eq(r, "SF(K) = Coker(F(alpha''))", 28, sf.value.coker.object->size());

    // every endomorphism of Q acts on the cokernel; fibers of the action map
    std::map<std::vector<Idx>, Idx> fibers;
    bool all_act = true;
    for (const InvMorphism& wpp : endq.elements) {
      try {
        ++fibers[induced_coker_action(wpp, cf, cf, F)];
      } catch (const Error&) {
        all_act = false;
      }
    }
    claim_true(r, "all 70 endomorphisms act on the cokernel", all_act);
    std::map<Idx, Idx> fiber_sizes;
    for (const auto& [action, count] : fibers) ++fiber_sizes[count];
    claim_eq<std::size_t>(r, "distinct induced transformations", 28, fibers.size());
    claim_eq(r, "fibers of size 7", 7, fiber_sizes.count(7) ? fiber_sizes[7] : 0);
    claim_eq(r, "singleton fibers", 21, fiber_sizes.count(1) ? fiber_sizes[1] : 0);
    Idx null_actions = 0;
    for (const auto& [action, count] : fibers) {
      bool null_act = true;
      for (Idx v : action)
        if (!cf.coker.object->is_fixed(v)) null_act = false;
      if (null_act) ++null_actions;
    }
    claim_eq(r, "null transformations among the 28", 16, null_actions);

    // naturality: right composition by rho commutes with every induced action
    {
      bool natural = true;
      std::vector<std::vector<Idx>> rho_actions;
      for (const InvMorphism& rho : endq.elements) {
        std::vector<Idx> act(static_cast<std::size_t>(cf.coker.object->size()), -1);
        bool ok = true;
        for (std::size_t i = 0; i < cf.f_right.elements.size(); ++i) {
          Idx cls = cf.coker.projection(static_cast<Idx>(i));
          Idx val = cf.coker.projection(
              cf.f_right.index_of(inv_compose(cf.f_right.elements[i], rho).map()));
          if (act[static_cast<std::size_t>(cls)] >= 0 && act[static_cast<std::size_t>(cls)] != val)
            ok = false;
          act[static_cast<std::size_t>(cls)] = val;
        }
        if (!ok) {
          natural = false;
          continue;
        }
        rho_actions.push_back(std::move(act));
      }
      std::set<std::vector<Idx>> left_actions;
      for (const auto& [action, count] : fibers) left_actions.insert(action);
      for (const auto& theta : left_actions)
        for (const auto& rho : rho_actions)
          for (Idx c = 0; c < cf.coker.object->size() && natural; ++c)
            if (rho[static_cast<std::size_t>(theta[static_cast<std::size_t>(c)])] !=
                theta[static_cast<std::size_t>(rho[static_cast<std::size_t>(c)])])
              natural = false;
      claim_true(r, "right composition commutes with the induced actions", natural);
    }

    // the automorphism group of K acts freely on C
    auto auts = inv_automorphisms(kobj, limits);
    claim_eq<std::size_t>(r, "|Aut(K)|", 4, auts.size());
    std::set<std::vector<Idx>> aut_actions;
    bool free_on_c = true;
    for (const InvMorphism& a : auts) {
      ExtensionFan fan = extension_fan(d.alpha, d.alpha, a, limits);
      std::vector<Idx> action = induced_coker_action(fan.induced.front(), cf, cf, F);
      aut_actions.insert(action);
      bool is_id = a == inv_identity(kobj);
      if (!is_id) {
        for (Idx cls = 0; cls < cf.coker.object->size(); ++cls)
          if (!cf.coker.object->is_fixed(cls) && action[static_cast<std::size_t>(cls)] == cls)
            free_on_c = false;
      }
    }
    claim_eq<std::size_t>(r, "the automorphism group acts by 4 distinct maps", 4,
                          aut_actions.size());
    claim_true(r, "non-trivial automorphisms act without fixed points on C", free_on_c);

    // the six-term satellite sequence is of order two end to end
    bool six_term = true;
    try {
      satellite_sequence(d.alpha, F, limits);
    } catch (const Error&) {
      six_term = false;
    }
    claim_true(r, "the six-term satellite sequence has null composites", six_term);
  }

  return r;
}

// ---- The S example ------------------------------------------------------------------

namespace {

struct SSetup {
  InvPtr b3;           // B^3 with sigma a<->c
  InvQuotient phi;     // B^3 ->> S
  InvSub j;            // kernel of phi
  ShortDoublyExact s;
};

SSetup s_setup() {
  // sigma on bitmasks: swap bits 0 (a) and 2 (c)
  std::vector<Idx> sigma(8);
  for (Idx m = 0; m < 8; ++m) sigma[static_cast<std::size_t>(m)] = ((m & 1) << 2) | (m & 2) | ((m >> 2) & 1);
  InvPtr b3 = make_inv(build::boolean_module(3), std::move(sigma));
  InvQuotient phi = inv_quotient(b3, InvCongruence::generated(b3, {{3, 6}}));  // a+b ~ b+c
  InvSub j = inv_kernel(phi.projection);
  SdesReport rep = validate_sdes(j.inclusion, phi.projection);
  return SSetup{b3, phi, j, rep.seq};
}

}  // namespace

Report s3_example(const SearchLimits& limits) {
  Report r{"three-generator example", {}};
  r.current_group = 5;
  SSetup s = s_setup();
  const InvPtr& sobj = s.phi.object;

  claim_eq(r, "|S|", 6, sobj->size());
  {
    // S^sigma = {0, b, a+c, a+b+c}
    std::set<Idx> fixed_expected = {s.phi.projection(0), s.phi.projection(2), s.phi.projection(5),
                                    s.phi.projection(7)};
    std::set<Idx> fixed;
    for (Idx x = 0; x < sobj->size(); ++x)
      if (sobj->is_fixed(x)) fixed.insert(x);
    claim_true(r, "S^sigma = {0, b, a+c, a+b+c}", fixed == fixed_expected);
  }
  claim_eq<std::size_t>(r, "|J| = complement of {a,c}", 6, mask_count(s.j.members));
  claim_true(r, "J omits exactly a and c",
             !s.j.members[1] && !s.j.members[4] && s.j.members[0] && s.j.members[2] &&
                 s.j.members[3] && s.j.members[5] && s.j.members[6] && s.j.members[7]);
  claim_true(r, "the sequence J -> B^3 ->> S is short doubly exact", true);  // validate_sdes ran
  claim_true(r, "the sequence does not split", !sdes_split(s.s, limits));
  claim_true(r, "J* is isomorphic to S", inv_isomorphic(dual_inv(s.j.module).object, sobj));

  FunctorF H(sobj, limits);
  const HomObject& hs = H.at(sobj);
  claim_eq<std::size_t>(r, "|End(S)| = |H(S)|", 22, hs.elements.size());
  InvMorphism hphi = H.map(s.phi.projection);
  Mask range = hphi.range();
  {
    Idx id_idx = hs.index_of(inv_identity(sobj).map());
    Idx sg_idx = hs.index_of(inv_sigma_post(inv_identity(sobj)).map());
    std::vector<Idx> missing;
    for (Idx i = 0; i < static_cast<Idx>(hs.elements.size()); ++i)
      if (!range[static_cast<std::size_t>(i)]) missing.push_back(i);
    claim_eq<std::size_t>(r, "exactly two endomorphisms do not lift", 2, missing.size());
    claim_true(r, "the unliftable endomorphisms are Id_S and sigma_S",
               missing == std::vector<Idx>{std::min(id_idx, sg_idx), std::max(id_idx, sg_idx)});
  }

  auto endb3 = inv_hom_set(s.b3, s.b3, limits);
  claim_eq<std::size_t>(r, "|End(B^3)| in Bmod^s", 32, endb3.size());
  std::vector<InvMorphism> end_s_seq;  // endomorphisms preserving J
  std::vector<std::pair<Idx, Idx>> violators;
  for (const InvMorphism& w : endb3) {
    bool preserves = true;
    for (Idx x = 0; x < s.b3->size(); ++x)
      if (s.j.members[static_cast<std::size_t>(x)] && !s.j.members[static_cast<std::size_t>(w(x))])
        preserves = false;
    if (preserves)
      end_s_seq.push_back(w);
    else
      violators.emplace_back(w(1), w(2));  // (f(a), f(b))
  }
  claim_eq<std::size_t>(r, "|End(s)| (endomorphisms preserving J)", 30, end_s_seq.size());
  std::sort(violators.begin(), violators.end());
  claim_true(r, "the two violators are (a,0) and (c,0)",
             violators == std::vector<std::pair<Idx, Idx>>{{1, 0}, {4, 0}});

  // restriction to End(J): surjective with 4 fibers of three
  auto endj = inv_hom_set(s.j.module, s.j.module, limits);
  claim_eq<std::size_t>(r, "|End(J)|", 22, endj.size());
  {
    std::map<std::vector<Idx>, Idx> fibers;
    for (const InvMorphism& w : end_s_seq) {
      std::vector<Idx> restricted(s.j.elems.size());
      for (std::size_t i = 0; i < s.j.elems.size(); ++i)
        restricted[i] = s.j.index_in[static_cast<std::size_t>(w(s.j.elems[i]))];
      ++fibers[restricted];
    }
    claim_eq<std::size_t>(r, "the restriction map hits all of End(J)", 22, fibers.size());
    Idx three = 0, one = 0;
    for (const auto& [map, count] : fibers) {
      if (count == 3) ++three;
      if (count == 1) ++one;
    }
    claim_eq(r, "fibers with three elements", 4, three);
    claim_eq(r, "singleton fibers", 18, one);
  }

  // condition (a) and the satellite
  SatelliteResult sh = satellite_eval(H, s.j.module, s.s, limits);
  claim_true(r, "condition (a) holds for all endomorphisms of J", sh.actions.holds);
  claim_true(r, "SH(J) is not null", !sh.value.coker.object->is_null_object());
  claim_eq(r, "SH(J) carrier: null part plus Id and sigma", 18, sh.value.coker.object->size());
  {
    // the cokernel is the projection p on the range and the identity outside
    const CokerF& cf = sh.value;
    bool ok = true;
    for (std::size_t i = 0; i < cf.f_right.elements.size(); ++i) {
      Idx cls = cf.coker.projection(static_cast<Idx>(i));
      if (range[i]) {
        Idx p_of = cf.f_right.object->p(static_cast<Idx>(i));
        if (cf.coker.projection(p_of) != cls) ok = false;
      } else {
        // singleton class
        for (std::size_t jdx = 0; jdx < cf.f_right.elements.size(); ++jdx)
          if (jdx != i && cf.coker.projection(static_cast<Idx>(jdx)) == cls) ok = false;
      }
    }
    claim_true(r, "the cokernel map is p on the range and injective outside", ok);
  }
  {
    bool six_term = true;
    try {
      satellite_sequence(s.s, H, limits);
    } catch (const Error&) {
      six_term = false;
    }
    claim_true(r, "the six-term satellite sequence has null composites", six_term);
  }

  return r;
}

// ---- Counterexample regressions --------------------------------------------------------

Report counterexample_regressions(const SearchLimits& limits) {
  Report r{"counterexample regressions", {}};
  r.current_group = 6;

  // Example: strictly exact at M without being a monomorphism; image size 7.
  {
    auto n = build::boolean_module(2);
    auto m = build::chain(3);
    PairMorphism phi(Morphism(m, n, {0, 0, 1}), Morphism(m, n, {0, 1, 3}));
    PairMorphism z0 = kappa(zero_morphism(zero_module(), m));
    claim_true(r, "not-mono example: strictly exact at M", strictly_exact_at({z0, phi}).exact);
    claim_true(r, "not-mono example: phi is not a monomorphism", !classify(phi).mono);
    std::vector<Idx> dbl = doubling_map(phi);
    std::vector<Idx> values = dbl;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    claim_eq<std::size_t>(r, "not-mono example: the image has 7 elements", 7, values.size());
    claim_eq<std::size_t>(r, "not-mono example: ( {1}, {1,2} ) is attained twice", 2,
                          static_cast<std::size_t>(std::count(dbl.begin(), dbl.end(), 1 * 4 + 3)));

    // no mono o epi factorization
    std::vector<ModulePtr> candidates = {zero_module(), build::bool_b(), build::chain(2),
                                         build::chain(3), build::boolean_module(2)};
    bool found = false;
    for (const ModulePtr& p : candidates) {
      if (p->size() > m->size()) continue;  // an epi image embeds in M x M pairs
      for (const Morphism& f : hom_set(m, p, limits))
        for (const Morphism& g : hom_set(m, p, limits)) {
          PairMorphism eta(f, g);
          if (!classify(eta).epi) continue;
          for (const Morphism& u : hom_set(p, n, limits))
            for (const Morphism& v : hom_set(p, n, limits)) {
              PairMorphism psi(u, v);
              if (!classify(psi).mono) continue;
              if (pair_compose(psi, eta) == phi) found = true;
            }
        }
    }
    claim_true(r, "not-mono example: no mono o epi factorization exists", !found);
  }

  // Example: the quotient functor is not representable in Bmod^2: |F(B)| = 5.
  {
    auto m = build::chain(3);
    auto b = build::bool_b();
    Idx count = 0;
    for (const Morphism& f : hom_set(m, b))
      for (const Morphism& g : hom_set(m, b))
        if (f(2) == g(2)) ++count;
    claim_eq(r, "non-representability: |F(B)|", 5, count);
  }

  // Example excok: 6-element cokernel, 14-element normal image.
  {
    SFunctor sm = s_functor(build::boolean_module(2));
    Mask members(static_cast<std::size_t>(sm.object->size()), false);
    for (Idx x : {0, 2, 3})
      for (Idx y : {0, 2, 3}) members[static_cast<std::size_t>(sm.embed(x, y))] = true;
    InvQuotient q = inv_cokernel_of_subset(sm.object, members);
    claim_eq(r, "excok: cokernel size", 6, q.object->size());
    Mask im = normal_image(sm.object, members);
    claim_eq<std::size_t>(r, "excok: normal image size", 14, mask_count(im));
    claim_true(r, "excok: (l,0) and (0,l) stay outside",
               !im[static_cast<std::size_t>(sm.embed(1, 0))] &&
                   !im[static_cast<std::size_t>(sm.embed(0, 1))]);
  }

  // The Im^(2) vs Im^(1) witness.
  {
    SFunctor sn = s_functor(build::chain(3));
    Mask e(static_cast<std::size_t>(sn.object->size()), false);
    for (auto [x, y] : std::vector<std::pair<Idx, Idx>>{
             {0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}})
      e[static_cast<std::size_t>(sn.embed(x, y))] = true;
    claim_eq(r, "filtration level of (0,n)", 2, normal_image_level(sn.object, e, sn.embed(0, 2)));
  }

  // Non-modularity of Nsb(sN).
  {
    SFunctor sn = s_functor(build::chain(3));
    NsbLattice l = nsb(sn.object, limits);
    auto w = modularity_failure(l);
    claim_true(r, "Nsb(sN) is not modular (witness found)", w.has_value());
  }

  // Example not sigma inject: null kernel without sigma-injectivity.
  {
    InvPtr e = build::wedge_double(build::chain(3));
    SFunctor sb = s_functor(build::bool_b());
    InvMorphism mu = build::wedge_mu(e, sb);
    claim_true(r, "wedge: the kernel of mu v mu is null", kernel_is_null(mu));
    claim_true(r, "wedge: mu v mu is not sigma-injective", !sigma_injective(mu));
  }

  // Example rad not functorial and its pushout variant.
  {
    auto n = build::chain(3);
    auto m = BModule::make({"0", "m", "x", "n"},
                           {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}});
    Congruence rn = radical(n);
    Congruence rm = radical(m);
    claim_true(r, "radical: m ~ 0 in N", rn.class_of(0) == rn.class_of(1));
    claim_true(r, "radical: m not~ 0 in M", rm.class_of(0) != rm.class_of(1));
  }
  {
    // pushout variant: z lies in the kernel of the pushed-out morphism
    InvPtr e = build::wedge_double(build::chain(3));
    SFunctor sb = s_functor(build::bool_b());
    InvMorphism h = build::wedge_mu(e, sb);
    const Idx nf = 8;
    std::vector<std::string> names = {"0", "m", "n", "m'", "n'", "z", "z'", "t"};
    std::vector<Idx> t(static_cast<std::size_t>(nf) * nf, 7);
    auto set = [&](Idx a, Idx b, Idx v) {
      t[static_cast<std::size_t>(a) * nf + b] = v;
      t[static_cast<std::size_t>(b) * nf + a] = v;
    };
    for (Idx i = 0; i < nf; ++i) {
      t[static_cast<std::size_t>(i) * nf + i] = i;
      set(0, i, i);
      set(7, i, 7);
    }
    set(1, 2, 2);
    set(3, 4, 4);
    set(1, 5, 5);
    set(2, 5, 7);
    set(3, 6, 6);
    set(4, 6, 7);
    ModulePtr base = BModule::make(names, t);
    InvPtr f = make_inv(base, {0, 3, 4, 1, 2, 6, 5, 7});
    InvMorphism incl(e, f, {0, 1, 2, 3, 4, 7});
    PushoutResult po = pushout(incl, h);
    claim_true(r, "pushout: z lies in Ker(h~) although z is not null",
               po.object->is_fixed(po.from_cod_f(5)) && !f->is_fixed(5));
  }

  return r;
}

}  // namespace bmod
