#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <variant>
#include <vector>

#include "sumsets/quotient.hpp"

namespace sumsets {

// Arithmetic progression {g+d, g+2d, ..., g+kd}; k is a positive integer
// not exceeding the order of d, so cosets of cyclic subgroups (and
// singletons) count as progressions and the empty set does not.
struct ApWitness {
  int g = 0;  // start
  int d = 0;  // difference
  int k = 1;  // length

  auto key() const { return std::tuple(g, d, k); }
  bool operator==(const ApWitness& o) const { return key() == o.key(); }
  bool operator<(const ApWitness& o) const { return key() < o.key(); }
};

inline GroupSubset ap_set(const GroupPtr& G, const ApWitness& w) {
  GroupSubset s(G);
  int x = w.g;
  for (int i = 0; i < w.k; ++i) {
    x = G->add(x, w.d);
    s.bits_mut().set(x);
  }
  return s;
}

// All (g,d) with {g+d,...,g+|A|d} = A.  Singletons admit one witness per
// difference, k = 1.
inline std::vector<ApWitness> ap_witnesses(const GroupSubset& A) {
  require(!A.empty(), ErrorKind::Domain, "ap_witnesses requires a non-empty set");
  const Group& G = A.group();
  const int k = A.size();
  std::vector<ApWitness> out;
  if (k == 1) {
    int a = A.min_element();
    for (int d = 0; d < G.order(); ++d) out.push_back({G.sub(a, d), d, 1});
  } else {
    GroupSubset diffs = difference_set(A, A);
    diffs.bits().for_each([&](int d) {
      if (d == 0 || element_order(G, d) < k) return;
      A.bits().for_each([&](int a) {
        int g = G.sub(a, d);  // candidate start: g+d in A
        int x = g;
        bool ok = true;
        for (int i = 0; ok && i < k; ++i) {
          x = G.add(x, d);
          ok = A.contains(x);
        }
        if (ok) out.push_back({g, d, k});
      });
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_arithmetic_progression(const GroupSubset& A) {
  return !ap_witnesses(A).empty();
}

// ---------------------------------------------------------------------------
// Kemperman's elementary pairs, types (I)-(IV).

struct WitnessI {
  char side = 'A';  // which operand is the singleton
};
struct WitnessII {
  ApWitness apA, apB;  // shared difference d, order(d) >= |A|+|B|-1
};
struct WitnessIII {
  int g1 = 0, g2 = 0;
  Subgroup H;
  GroupSubset H1, H2;  // H = H1 u H2 u {0} partition
};
struct WitnessIV {
  int g1 = 0, g2 = 0;
  Subgroup H;
  GroupSubset H1, H2;  // H = H1 u H2 partition, both aperiodic
};

using ElementaryWitness = std::variant<WitnessI, WitnessII, WitnessIII, WitnessIV>;

inline int witness_type(const ElementaryWitness& w) { return (int)w.index() + 1; }

namespace detail {

inline auto witness_sort_key(const ElementaryWitness& w) {
  // (type, data...) tuple encoded as vector<int> for simple ordering
  std::vector<int> key{witness_type(w)};
  if (auto* a = std::get_if<WitnessI>(&w)) {
    key.push_back(a->side == 'A' ? 0 : 1);
  } else if (auto* b = std::get_if<WitnessII>(&w)) {
    key.insert(key.end(), {b->apA.d, b->apA.g, b->apB.g, b->apA.k, b->apB.k});
  } else if (auto* c = std::get_if<WitnessIII>(&w)) {
    auto ids = c->H.set().ids();
    key.insert(key.end(), ids.begin(), ids.end());
    key.push_back(-1);
    key.push_back(c->g1);
    key.push_back(c->g2);
  } else if (auto* d = std::get_if<WitnessIV>(&w)) {
    auto ids = d->H.set().ids();
    key.insert(key.end(), ids.begin(), ids.end());
    key.push_back(-1);
    key.push_back(d->g1);
    key.push_back(d->g2);
  }
  return key;
}

// The exactly-one element c of A+B with nu_c = 1, if it exists.
inline std::optional<int> unique_rep_element(const GroupSubset& A, const GroupSubset& B) {
  const Group& G = A.group();
  std::vector<int> counts(G.order(), 0);
  A.bits().for_each([&](int a) {
    B.bits().for_each([&](int b) { ++counts[G.add(a, b)]; });
  });
  std::optional<int> found;
  for (int c = 0; c < G.order(); ++c) {
    if (counts[c] == 1) {
      if (found) return std::nullopt;
      found = c;
    }
  }
  return found;
}

}  // namespace detail

// All elementary witnesses for (A,B), every applicable type, sorted by
// (type, canonical witness data).  Empty result <=> the pair is not
// elementary.
inline std::vector<ElementaryWitness> classify_elementary(const GroupSubset& A,
                                                          const GroupSubset& B) {
  require_same_group(A, B);
  require(!A.empty() && !B.empty(), ErrorKind::Domain,
          "classify_elementary requires non-empty sets");
  const Group& G = A.group();
  const GroupPtr& Gp = A.group_ptr();
  std::vector<ElementaryWitness> out;

  // (I) a singleton on either side
  if (A.size() == 1) out.push_back(WitnessI{'A'});
  if (B.size() == 1) out.push_back(WitnessI{'B'});

  // (II) progressions with a common difference of large enough order
  {
    const long long need = A.size() + B.size() - 1;
    std::map<int, std::vector<int>> startsA, startsB;
    for (const ApWitness& w : ap_witnesses(A)) startsA[w.d].push_back(w.g);
    for (const ApWitness& w : ap_witnesses(B)) startsB[w.d].push_back(w.g);
    for (const auto& [d, gsA] : startsA) {
      auto it = startsB.find(d);
      if (it == startsB.end() || element_order(G, d) < need) continue;
      for (int gA : gsA)
        for (int gB : it->second)
          out.push_back(WitnessII{{gA, d, A.size()}, {gB, d, B.size()}});
    }
  }

  // (III) punctured-subgroup partition with a unique-representation element
  if (A.size() >= 2 && B.size() >= 2) {
    if (auto cstar = detail::unique_rep_element(A, B)) {
      for (const Subgroup& H : all_subgroups(Gp)) {
        if (H.size() != A.size() + B.size() - 1) continue;
        A.bits().for_each([&](int g1) {
          int g2 = G.sub(*cstar, g1);
          if (!B.contains(g2)) return;
          GroupSubset As = shift(A, G.neg(g1));       // A - g1, contains 0
          GroupSubset Bs = shift(negate(B), g2);      // g2 - B, contains 0
          if (!As.is_subset_of(H.set()) || !Bs.is_subset_of(H.set())) return;
          GroupSubset H1 = As.without(0);
          GroupSubset H2 = Bs.without(0);
          if (H1.bits().intersects(H2.bits())) return;
          out.push_back(WitnessIII{g1, g2, H, H1, H2});
        });
      }
    }
  }

  // (IV) aperiodic partition of a full subgroup, mu >= 2
  if (min_rep(A, B) >= 2 && aperiodic(A) && aperiodic(B)) {
    int a0 = A.min_element(), b0 = B.min_element();
    for (const Subgroup& H : all_subgroups(Gp)) {
      if (H.size() != A.size() + B.size()) continue;
      if (!shift(A, G.neg(a0)).is_subset_of(H.set())) continue;
      if (!shift(negate(B), b0).is_subset_of(H.set())) continue;
      // any g1 in a0+H keeps A-g1 inside H; likewise for g2
      GroupSubset cosetA = shift(H.set(), a0);
      GroupSubset cosetB = shift(H.set(), b0);
      cosetA.bits().for_each([&](int g1) {
        GroupSubset H1 = shift(A, G.neg(g1));
        cosetB.bits().for_each([&](int g2) {
          GroupSubset H2 = shift(negate(B), g2);
          if (H1.bits().intersects(H2.bits())) return;
          out.push_back(WitnessIV{g1, g2, H, H1, H2});
        });
      });
    }
  }

  std::sort(out.begin(), out.end(), [](const ElementaryWitness& x, const ElementaryWitness& y) {
    return detail::witness_sort_key(x) < detail::witness_sort_key(y);
  });
  return out;
}

inline bool is_elementary(const GroupSubset& A, const GroupSubset& B) {
  return !classify_elementary(A, B).empty();
}

// Lowest applicable type number; 0 when the pair is not elementary.
inline int canonical_type(const std::vector<ElementaryWitness>& witnesses) {
  return witnesses.empty() ? 0 : witness_type(witnesses.front());
}

// Clause-by-clause validation of a claimed witness, independent of the
// search above.  Malformed witnesses yield false rather than an error.
inline bool check_elementary_witness(const GroupSubset& A, const GroupSubset& B,
                                     const ElementaryWitness& w) {
  require_same_group(A, B);
  if (A.empty() || B.empty()) return false;
  const Group& G = A.group();
  const GroupPtr& Gp = A.group_ptr();

  if (auto* wi = std::get_if<WitnessI>(&w)) {
    if (wi->side == 'A') return A.size() == 1;
    if (wi->side == 'B') return B.size() == 1;
    return false;
  }

  if (auto* wii = std::get_if<WitnessII>(&w)) {
    const ApWitness &pa = wii->apA, &pb = wii->apB;
    if (pa.d != pb.d) return false;
    if (pa.g < 0 || pa.g >= G.order() || pa.d < 0 || pa.d >= G.order()) return false;
    long long ord = element_order(G, pa.d);
    if (pa.k < 1 || pa.k > ord || pb.k < 1 || pb.k > ord) return false;
    if (pa.k != A.size() || pb.k != B.size()) return false;
    if (!(ap_set(Gp, pa) == A) || !(ap_set(Gp, pb) == B)) return false;
    return ord >= (long long)A.size() + B.size() - 1;
  }

  auto check_partition_common = [&](const Subgroup& H, const GroupSubset& H1,
                                    const GroupSubset& H2) {
    if (!H.group().same_as(G)) return false;
    if (!detail::is_subgroup_bits(G, H.bits())) return false;
    if (H1.empty() || H2.empty()) return false;
    if (!H1.is_subset_of(H.set()) || !H2.is_subset_of(H.set())) return false;
    if (H1.bits().intersects(H2.bits())) return false;
    return true;
  };

  if (auto* w3 = std::get_if<WitnessIII>(&w)) {
    const Subgroup& H = w3->H;
    if (!check_partition_common(H, w3->H1, w3->H2)) return false;
    if (w3->H1.contains(0) || w3->H2.contains(0)) return false;
    if (w3->H1.size() + w3->H2.size() + 1 != H.size()) return false;
    if (H.size() < 3) return false;
    if (!(shift(w3->H1.with(0), w3->g1) == A)) return false;
    if (!(shift(negate(w3->H2.with(0)), w3->g2) == B)) return false;
    // c = g1+g2 must be the only element of A+B with nu_c = 1
    auto cstar = detail::unique_rep_element(A, B);
    return cstar && *cstar == G.add(w3->g1, w3->g2);
  }

  if (auto* w4 = std::get_if<WitnessIV>(&w)) {
    const Subgroup& H = w4->H;
    if (!check_partition_common(H, w4->H1, w4->H2)) return false;
    if (w4->H1.size() + w4->H2.size() != H.size()) return false;
    if (!aperiodic(w4->H1) || !aperiodic(w4->H2)) return false;
    if (!(shift(w4->H1, w4->g1) == A)) return false;
    if (!(shift(negate(w4->H2), w4->g2) == B)) return false;
    return min_rep(A, B) >= 2;
  }

  return false;
}

}  // namespace sumsets
