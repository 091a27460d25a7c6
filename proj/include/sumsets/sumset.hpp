#pragma once

#include <vector>

#include "sumsets/subset.hpp"

namespace sumsets {

// A+B = { a+b : a in A, b in B }.  Empty operands are rejected; every
// statement in this theory assumes non-empty sets.
inline GroupSubset sumset(const GroupSubset& A, const GroupSubset& B) {
  require_same_group(A, B);
  require(!A.empty() && !B.empty(), ErrorKind::Domain,
          "sumset requires non-empty operands");
  const Group& G = A.group();
  GroupSubset out(A.group_ptr());
  // iterate over the smaller operand
  const GroupSubset& small = A.size() <= B.size() ? A : B;
  const GroupSubset& large = A.size() <= B.size() ? B : A;
  small.bits().for_each([&](int s) {
    large.bits().for_each([&](int t) { out.bits_mut().set(G.add(s, t)); });
  });
  return out;
}

inline GroupSubset negate(const GroupSubset& A) {
  require(!A.empty(), ErrorKind::Domain, "negate requires a non-empty operand");
  const Group& G = A.group();
  GroupSubset out(A.group_ptr());
  A.bits().for_each([&](int a) { out.bits_mut().set(G.neg(a)); });
  return out;
}

inline GroupSubset shift(const GroupSubset& A, int g) {
  require(!A.empty(), ErrorKind::Domain, "shift requires a non-empty operand");
  const Group& G = A.group();
  require(g >= 0 && g < G.order(), ErrorKind::Domain, "shift element out of range");
  GroupSubset out(A.group_ptr());
  A.bits().for_each([&](int a) { out.bits_mut().set(G.add(a, g)); });
  return out;
}

inline GroupSubset difference_set(const GroupSubset& A, const GroupSubset& B) {
  return sumset(A, negate(B));
}

// pi(S) = { g : S+g = S }, the period (stabilizer).  Every shift is tested
// directly; no shortcut stands in for the definition.
inline Subgroup period(const GroupSubset& S) {
  require(!S.empty(), ErrorKind::Domain, "period requires a non-empty set");
  const Group& G = S.group();
  GroupSubset stab(S.group_ptr());
  for (int g = 0; g < G.order(); ++g) {
    bool fixes = true;
    S.bits().for_each([&](int s) {
      if (fixes && !S.contains(G.add(s, g))) fixes = false;
    });
    if (fixes) stab.bits_mut().set(g);
  }
  return Subgroup::unchecked(stab);
}

inline bool aperiodic(const GroupSubset& S) { return period(S).is_trivial(); }

// nu_c(A,B): ordered representation count of c.
inline long long rep_count(int c, const GroupSubset& A, const GroupSubset& B) {
  require_same_group(A, B);
  const Group& G = A.group();
  require(c >= 0 && c < G.order(), ErrorKind::Domain, "element id out of range");
  long long n = 0;
  A.bits().for_each([&](int a) {
    if (B.contains(G.sub(c, a))) ++n;
  });
  return n;
}

// mu(A,B) = min over c in A+B of nu_c(A,B); always >= 1.
inline long long min_rep(const GroupSubset& A, const GroupSubset& B) {
  require_same_group(A, B);
  require(!A.empty() && !B.empty(), ErrorKind::Domain,
          "min_rep requires non-empty operands");
  const Group& G = A.group();
  std::vector<long long> counts(G.order(), 0);
  A.bits().for_each([&](int a) {
    B.bits().for_each([&](int b) { ++counts[G.add(a, b)]; });
  });
  long long best = -1;
  for (long long c : counts)
    if (c > 0 && (best < 0 || c < best)) best = c;
  return best;
}

// |C+H| - |C|; zero iff C is a union of H-cosets, <= |H|-1 iff C is a dense
// subset of a union of H-cosets.
inline long long saturation_defect(const GroupSubset& C, const Subgroup& H) {
  require(!C.empty(), ErrorKind::Domain,
          "saturation_defect requires a non-empty set");
  require_same_group(C, H.set());
  return sumset(C, H.set()).size() - C.size();
}

inline bool is_union_of_cosets(const GroupSubset& C, const Subgroup& H) {
  if (C.empty()) return true;
  return saturation_defect(C, H) == 0;
}

// Condition (1.1): |A+B| <= |A| + |B| - 1.
inline bool small_sumset_holds(const GroupSubset& A, const GroupSubset& B) {
  return sumset(A, B).size() <= A.size() + B.size() - 1;
}

// Kemperman's condition (2.1): pi(A+B) = {0} or mu(A,B) = 1.
inline bool kemperman_condition(const GroupSubset& A, const GroupSubset& B) {
  return period(sumset(A, B)).is_trivial() || min_rep(A, B) == 1;
}

}  // namespace sumsets
