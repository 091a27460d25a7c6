#pragma once

#include <numeric>
#include <optional>
#include <tuple>

#include "sumsets/theorems.hpp"

namespace sumsets {

// Exact rational arithmetic; boundary cases like c = 7/4 must not pass
// through floating point.
struct Rational {
  long long num = 0, den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    require(d != 0, ErrorKind::Domain, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num * b.num, a.den * b.den};
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    return {a.num * b.den, a.den * b.num};
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

inline void require_exponent_two(const Group& g) {
  require(g.exponent_two(), ErrorKind::Domain,
          "operation requires an elementary abelian 2-group");
}

inline GroupSubset double_set(const GroupSubset& A) { return sumset(A, A); }

// All non-zero h0 in H with H = S u (h0+S) disjointly; empty unless
// |S| = |H|/2.
inline std::vector<int> antisym_witnesses(const GroupSubset& S, const Subgroup& H) {
  require_exponent_two(S.group());
  require_same_group(S, H.set());
  require(S.is_subset_of(H.set()), ErrorKind::Domain, "S must be a subset of H");
  std::vector<int> out;
  if (S.empty() || 2 * S.size() != H.size()) return out;
  const Group& G = S.group();
  H.bits().for_each([&](int h0) {
    if (h0 == 0) return;
    bool disjoint = true;
    S.bits().for_each([&](int s) {
      if (disjoint && S.contains(G.add(s, h0))) disjoint = false;
    });
    if (disjoint) out.push_back(h0);
  });
  return out;
}

inline bool is_antisymmetric_in(const GroupSubset& S, const Subgroup& H) {
  return !antisym_witnesses(S, H).empty();
}

struct SelfPairWitness {
  int g = 0;   // shift: A = g + S
  Subgroup H;  // ambient subgroup of the antisymmetric set
  int h0 = 0;
  GroupSubset S;  // aperiodic h0-antisymmetric subset of H, contains 0
};

// Lemma "(A,A) elementary iff A is a shift of an aperiodic antisymmetric
// subset of a subgroup", constructive direction.  The shift is normalized
// to the canonical minimum of A so that 0 lies in S.
inline std::optional<SelfPairWitness> selfpair_witness(const GroupSubset& A) {
  require_exponent_two(A.group());
  require(!A.empty(), ErrorKind::Domain, "selfpair_witness requires a non-empty set");
  const Group& G = A.group();
  const GroupPtr& Gp = A.group_ptr();
  int g = A.min_element();
  if (A.size() == 1) {
    // singleton recipe: S = {0}, H any two-element subgroup; take the
    // canonical smallest one
    require(G.order() >= 2, ErrorKind::Domain, "trivial group has no two-element subgroup");
    SelfPairWitness w;
    w.g = g;
    w.h0 = 1;  // smallest non-zero element
    w.H = Subgroup::generated_by(Gp, {w.h0});
    w.S = GroupSubset::single(Gp, 0);
    return w;
  }
  GroupSubset S = shift(A, g);  // exponent 2: A - g = A + g, contains 0
  if (!aperiodic(S)) return std::nullopt;
  GroupSubset twoS = double_set(S);
  for (int h0 = 1; h0 < G.order(); ++h0) {
    if (twoS.contains(h0)) continue;  // h0 in 2S <=> S meets h0+S
    GroupSubset T = set_union(S, shift(S, h0));
    if (T.size() != 2 * S.size()) continue;
    if (!detail::is_subgroup_bits(G, T.bits())) continue;
    SelfPairWitness w;
    w.g = g;
    w.h0 = h0;
    w.H = Subgroup::unchecked(T);
    w.S = S;
    return w;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Theorem struct: classification of |2A| < 2|A| in (Z/2Z)^r.

struct StructCaseI {
  Subgroup H;  // A inside an H-coset with |A| > |H|/2; here H = pi(2A) = 2A - shift
};
struct StructCaseII {
  Subgroup F, H;      // |F| >= 8, F and H intersect trivially
  GroupSubset S;      // aperiodic antisymmetric subset of F
  int shift_elem = 0;
  GroupSubset removed;  // fewer than |H|/2 elements taken out of shift+S+H
};
struct StructClassification {
  std::optional<StructCaseI> case_i;
  std::optional<StructCaseII> case_ii;
};

inline StructClassification struct_classify(const GroupSubset& A) {
  require_exponent_two(A.group());
  require(!A.empty(), ErrorKind::Domain, "struct_classify requires a non-empty set");
  GroupSubset twoA = double_set(A);
  require(twoA.size() < 2 * A.size(), ErrorKind::Precondition,
          "struct_classify requires |2A| < 2|A|");
  const GroupPtr& Gp = A.group_ptr();
  Subgroup H = period(twoA);
  StructClassification out;
  if (twoA.size() == H.size()) {
    // 2A is a single H-coset (in fact a subgroup: 0 = a+a lies in 2A)
    require(2 * A.size() > H.size(), ErrorKind::Internal, "case (i): |A| <= |H|/2");
    out.case_i = StructCaseI{H};
    return out;
  }
  // case (ii): recover F, S through the quotient by H = pi(2A)
  QuotientMap q(Gp, H);
  GroupSubset Abar = q.image(A);
  auto w = selfpair_witness(Abar);
  require(w.has_value(), ErrorKind::Internal,
          "case (ii): quotient pair is not elementary");
  // complement subgroup F with F + H = preimage(Fbar), F n H = {0}; greedy
  // basis extension, any valid complement is acceptable
  GroupSubset W = q.preimage(w->H.set());
  DynBitset span = H.bits();
  std::vector<int> fgens;
  W.bits().for_each([&](int x) {
    if (!span.test(x)) {
      fgens.push_back(x);
      span = detail::extend_subgroup(*Gp, span, x);
    }
  });
  Subgroup F = Subgroup::generated_by(Gp, fgens);
  require(F.size() == w->H.size(), ErrorKind::Internal,
          "case (ii): complement has the wrong order");
  // lift Sbar through F: each H-coset in F+H holds exactly one element of F
  GroupSubset S(Gp);
  F.bits().for_each([&](int f) {
    if (w->S.contains(q.apply(f))) S.bits_mut().set(f);
  });
  require(S.size() == w->S.size(), ErrorKind::Internal, "case (ii): lift of S failed");
  int z = q.rep(w->g);  // minimal representative of the shift coset
  GroupSubset cover = shift(sumset(S, H.set()), z);
  require(A.is_subset_of(cover), ErrorKind::Internal,
          "case (ii): A escapes shift+S+H");
  GroupSubset removed = set_minus(cover, A);
  require(2 * removed.size() < H.size(), ErrorKind::Internal,
          "case (ii): removal budget exceeded");
  require(F.size() >= 8, ErrorKind::Internal, "case (ii): |F| < 8");
  require((F.bits() & H.bits()).count() == 1, ErrorKind::Internal,
          "case (ii): F and H must intersect trivially");
  require(aperiodic(S) && is_antisymmetric_in(S, F), ErrorKind::Internal,
          "case (ii): lifted S is not aperiodic antisymmetric");
  require(twoA.size() == (long long)(F.size() - 1) * H.size(), ErrorKind::Internal,
          "case (ii): |2A| != (|F|-1)|H|");
  out.case_ii = StructCaseII{F, H, S, z, removed};
  return out;
}

// Converse direction: build A = (shift+S+H) \ removed and predict its
// doubling (|F| - |pi(S)|)|H| exactly.
inline std::pair<GroupSubset, long long> struct_synthesize(
    const Subgroup& F, const Subgroup& H, const GroupSubset& S, int shift_elem,
    const GroupSubset& removed) {
  require_exponent_two(F.group());
  require_same_group(F.set(), H.set());
  require_same_group(F.set(), S);
  require(!F.is_trivial(), ErrorKind::Contract, "F must be a non-zero subgroup");
  DynBitset inter = F.bits() & H.bits();
  require(inter.count() == 1, ErrorKind::Contract, "F and H must intersect trivially");
  require(!S.empty() && S.is_subset_of(F.set()), ErrorKind::Contract,
          "S must be a non-empty subset of F");
  require(is_antisymmetric_in(S, F), ErrorKind::Contract,
          "S must be an antisymmetric subset of F");
  GroupSubset cover = shift(sumset(S, H.set()), shift_elem);
  require(removed.is_subset_of(cover), ErrorKind::Contract,
          "removed must lie inside shift+S+H");
  require(2 * removed.size() < H.size(), ErrorKind::Contract,
          "fewer than |H|/2 elements may be removed");
  GroupSubset A = set_minus(cover, removed);
  long long predicted = (long long)(F.size() - period(S).size()) * H.size();
  GroupSubset twoA = double_set(A);
  require(twoA.size() == predicted && predicted < 2LL * A.size(), ErrorKind::Internal,
          "synthesized doubling does not match (|F|-|pi(S)|)|H|");
  return {A, predicted};
}

// Prior structure bounds specialized to c < 2: the sumset shape (2A = H or
// a punctured-by-coset H) and the density bound |A| >= u(c)|H'| with
// u(c) = (3c-1-c^2)/(2c-1), all in exact rationals.
inline VerificationReport verify_prior_bounds(const GroupSubset& A) {
  require_exponent_two(A.group());
  require(!A.empty(), ErrorKind::Domain, "verify_prior_bounds requires a non-empty set");
  GroupSubset twoA = double_set(A);
  require(twoA.size() < 2 * A.size(), ErrorKind::Precondition,
          "verify_prior_bounds requires |2A| < 2|A|");
  const GroupPtr& Gp = A.group_ptr();
  const Group& G = *Gp;

  VerificationReport r;
  r.theorem_id = "prior_bounds";
  r.hypotheses_hold = true;
  Rational c((long long)twoA.size(), (long long)A.size());
  r.witness["c"] = Json{{"num", c.num}, {"den", c.den}};

  // sumset-shape conclusion
  bool hnp = false;
  Json hnp_witness = Json::object();
  if (detail::is_subgroup_bits(G, twoA.bits())) {
    hnp = true;
    hnp_witness["branch"] = "full";
    hnp_witness["H"] = json_set(twoA);
  } else if (c >= Rational(7, 4)) {
    for (const Subgroup& H : all_subgroups(Gp)) {
      if (!twoA.is_subset_of(H.set())) continue;
      GroupSubset D = set_minus(H.set(), twoA);
      if (D.empty()) continue;
      int d0 = D.min_element();
      GroupSubset Fset = shift(D, d0);  // exponent 2: D - d0
      if (!detail::is_subgroup_bits(G, Fset.bits())) continue;
      if (8 * Fset.size() > H.size()) continue;
      hnp = true;
      hnp_witness["branch"] = "punctured";
      hnp_witness["H"] = json_subgroup(H);
      hnp_witness["F"] = json_set(Fset);
      hnp_witness["h0"] = json_element(G, d0);
      break;
    }
  }
  hnp_witness["holds"] = hnp;
  r.witness["hnp"] = hnp_witness;

  // density conclusion against the smallest subgroup containing A, after
  // translating A to contain 0 (doubling is shift-invariant in exponent 2,
  // and the companion bound phrases containment up to a coset)
  int a0 = A.min_element();
  Subgroup span = Subgroup::generated_by(Gp, shift(A, a0).ids());
  Rational u = (Rational(3, 1) * c - Rational(1, 1) - c * c) /
               (Rational(2, 1) * c - Rational(1, 1));
  bool dhp = Rational((long long)A.size(), 1) >= u * Rational((long long)span.size(), 1);
  Json dhp_witness = Json::object();
  dhp_witness["holds"] = dhp;
  dhp_witness["H"] = json_subgroup(span);
  dhp_witness["shift"] = json_element(G, a0);
  dhp_witness["u"] = Json{{"num", u.num}, {"den", u.den}};
  r.witness["dhp"] = dhp_witness;

  r.conclusion_holds = hnp && dhp;
  return r;
}

}  // namespace sumsets
