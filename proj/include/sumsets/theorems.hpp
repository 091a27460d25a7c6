#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sumsets/decompose.hpp"
#include "sumsets/jsonutil.hpp"

namespace sumsets {

// Outcome of checking one named theorem on concrete data.  The witness
// payload makes the report re-checkable on its own.
struct VerificationReport {
  std::string theorem_id;
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  Json witness = Json::object();
};

// Direct verifiers for the classical statements: hypotheses and conclusion
// are evaluated exactly, nothing is repaired.
inline VerificationReport verify_theorem(const std::string& theorem_id,
                                         const GroupSubset& A, const GroupSubset& B) {
  require_same_group(A, B);
  require(!A.empty() && !B.empty(), ErrorKind::Domain,
          "verify_theorem requires non-empty sets");
  VerificationReport r;
  r.theorem_id = theorem_id;
  GroupSubset AB = sumset(A, B);

  if (theorem_id == "kneser") {
    r.hypotheses_hold = AB.size() <= A.size() + B.size() - 1;
    Subgroup H = period(AB);
    if (r.hypotheses_hold) {
      long long lhs = AB.size();
      long long rhs = sumset(A, H.set()).size() + sumset(B, H.set()).size() - H.size();
      r.conclusion_holds = lhs == rhs;
    }
    r.witness["H"] = json_subgroup(H);
    return r;
  }
  if (theorem_id == "kemperman_scherk") {
    r.hypotheses_hold = true;
    long long mu = min_rep(A, B);
    r.conclusion_holds = AB.size() >= A.size() + B.size() - mu;
    r.witness["mu"] = mu;
    return r;
  }
  if (theorem_id == "corollary_half") {
    // |A+B| < |A|/2 + |B|, compared exactly
    r.hypotheses_hold = 2LL * AB.size() < A.size() + 2LL * B.size();
    Subgroup P = period(AB);
    if (r.hypotheses_hold) {
      QuotientMap q(A.group_ptr(), P);
      r.conclusion_holds = q.image(A).size() == 1;
    }
    r.witness["period"] = json_subgroup(P);
    return r;
  }
  if (theorem_id == "equality_claim") {
    r.hypotheses_hold = AB.size() <= A.size() + B.size() - 1 && kemperman_condition(A, B);
    if (r.hypotheses_hold)
      r.conclusion_holds = AB.size() == A.size() + B.size() - 1;
    r.witness["sumset_size"] = AB.size();
    return r;
  }
  throw_usage("unknown theorem id '" + theorem_id +
              "' (expected kneser|kemperman_scherk|corollary_half|equality_claim)");
}

// Thick component ("Vosper subset"): every B with |B| >= 2 has
// |A+B| >= |A|+|B| or |A|+|B| >= |G|-1.  Honest brute force over all B;
// the definition is the oracle.
inline bool is_thick_component(const GroupSubset& A, int brute_cap = 20) {
  require(!A.empty(), ErrorKind::Domain, "is_thick_component requires a non-empty set");
  const Group& G = A.group();
  require(G.order() <= brute_cap,
          ErrorKind::Resource,
          "group order " + std::to_string(G.order()) +
              " exceeds the thick-component brute-force cap " + std::to_string(brute_cap));
  const int n = G.order();
  const long long full = 1LL << n;
  for (long long mask = 0; mask < full; ++mask) {
    int bsize = std::popcount((unsigned long long)mask);
    if (bsize < 2) continue;
    if (A.size() + bsize >= n - 1) continue;
    GroupSubset B(A.group_ptr());
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) B.bits_mut().set(i);
    if (sumset(A, B).size() < A.size() + bsize) return false;
  }
  return true;
}

enum class ThickBranch { Ap, Thick };

// For |A| <= |G|/2, find H with |A+H|-|A| <= |H|-1 and A+H != G whose
// quotient image is an arithmetic progression or a thick component.  When
// A lies in a coset of a proper subgroup the reduction collapses A to a
// single point of the quotient, taking the minimal such subgroup;
// otherwise the smallest qualifying H is selected.
inline std::pair<Subgroup, ThickBranch> thick_reduction(const GroupSubset& A,
                                                        int brute_cap = 20) {
  require(!A.empty(), ErrorKind::Domain, "thick_reduction requires a non-empty set");
  const GroupPtr& Gp = A.group_ptr();
  require(2 * A.size() <= Gp->order(), ErrorKind::Precondition,
          "thick_reduction requires |A| <= |G|/2");
  GroupSubset anchored = shift(A, Gp->neg(A.min_element()));
  Subgroup coset_span = Subgroup::generated_by(Gp, anchored.ids());
  if (!coset_span.is_whole()) return {coset_span, ThickBranch::Ap};
  for (const Subgroup& H : all_subgroups(Gp)) {
    if (H.is_whole()) continue;
    if (saturation_defect(A, H) > H.size() - 1) continue;
    if (sumset(A, H.set()).size() == Gp->order()) continue;
    QuotientMap q(Gp, H);
    GroupSubset Abar = q.image(A);
    if (is_arithmetic_progression(Abar)) return {H, ThickBranch::Ap};
    if (is_thick_component(Abar, brute_cap)) return {H, ThickBranch::Thick};
  }
  throw_internal("thick_reduction: no qualifying subgroup found");
}

// Hamidoune-Plagne structure: either a dense non-zero subgroup exists for
// A, or A is an arithmetic progression plus full cosets covering all but
// one coset of some subgroup.  Branch (i) is preferred, smallest H first.
inline VerificationReport hampla_structure(const GroupSubset& A, const GroupSubset& B) {
  require_same_group(A, B);
  require(!A.empty(), ErrorKind::Precondition, "hampla requires non-empty A");
  require(B.size() >= 2, ErrorKind::Precondition, "hampla requires |B| >= 2");
  GroupSubset AB = sumset(A, B);
  require(AB.size() <= A.size() + B.size() - 1, ErrorKind::Precondition,
          "hypothesis (1.1) fails: |A+B| > |A|+|B|-1");
  const GroupPtr& Gp = A.group_ptr();
  require(AB.size() <= Gp->order() - 2, ErrorKind::Precondition,
          "hampla requires |A+B| <= |G|-2");

  VerificationReport r;
  r.theorem_id = "hampla";
  r.hypotheses_hold = true;

  for (const Subgroup& H : all_subgroups(Gp)) {
    if (H.is_trivial()) continue;
    if (saturation_defect(A, H) > H.size() - 1) continue;
    if (sumset(A, H.set()).size() == Gp->order()) continue;
    r.conclusion_holds = true;
    r.witness["branch"] = "i";
    r.witness["H"] = json_subgroup(H);
    return r;
  }
  for (const Subgroup& H : all_subgroups(Gp)) {
    if (H.is_trivial()) continue;
    QuotientMap q(Gp, H);
    std::vector<int> full_reps;
    GroupSubset fulls(Gp);
    for (int cid = 0; cid < q.index(); ++cid) {
      GroupSubset coset = q.coset(cid);
      if (coset.is_subset_of(A)) {
        full_reps.push_back(q.rep(cid));
        fulls = set_union(fulls, coset);
      }
    }
    if ((int)full_reps.size() != q.index() - 1) continue;
    GroupSubset A0 = set_minus(A, fulls);
    if (A0.empty() || !is_arithmetic_progression(A0)) continue;
    r.conclusion_holds = true;
    r.witness["branch"] = "ii";
    r.witness["H"] = json_subgroup(H);
    r.witness["n"] = q.index();
    Json gs = Json::array();
    for (int rep : full_reps) gs.push_back(json_element(*Gp, rep));
    r.witness["gs"] = gs;
    r.witness["A0"] = json_set(A0);
    return r;
  }
  throw_internal("hampla_structure: no branch witness found under valid hypotheses");
}

// ---------------------------------------------------------------------------
// Appendix: partitions behind elementary pairs of types III and IV.

enum class PartitionKind { Coset, PuncturedCoset };

struct PartitionWitness {
  PartitionKind kind = PartitionKind::Coset;
  int g1 = 0, g2 = 0;
  Subgroup H;
  GroupSubset H1, H2;

  GroupSubset rebuild_A() const {
    GroupSubset base = kind == PartitionKind::Coset ? H1.with(0) : H1;
    return shift(base, g1);
  }
  GroupSubset rebuild_B() const {
    GroupSubset base = kind == PartitionKind::Coset ? H2.with(0) : H2;
    return shift(negate(base), g2);
  }
};

// Propositions III(i)/IV(i): when A+B is an H-coset (with min size 2) or a
// punctured H-coset, recover the defining partition.  The proof recipe is
// followed: normalize at a unique-representation element, deterministic by
// canonical choice of that element.
inline PartitionWitness recover_partition(const GroupSubset& A, const GroupSubset& B,
                                          const Subgroup& H) {
  require_same_group(A, B);
  require_same_group(A, H.set());
  require(!A.empty() && !B.empty(), ErrorKind::Domain,
          "recover_partition requires non-empty sets");
  require(small_sumset_holds(A, B), ErrorKind::Precondition,
          "hypothesis (1.1) fails");
  require(kemperman_condition(A, B), ErrorKind::Precondition,
          "hypothesis (2.1) fails");
  const Group& G = A.group();
  const GroupPtr& Gp = A.group_ptr();
  GroupSubset AB = sumset(A, B);
  QuotientMap q(Gp, H);
  bool single_coset = q.image(AB).size() == 1;
  bool coset_shape = single_coset && AB.size() == H.size();
  bool punctured_shape = single_coset && AB.size() == H.size() - 1;
  require(coset_shape || punctured_shape, ErrorKind::Precondition,
          "A+B is neither an H-coset nor an H-coset with one element removed");

  PartitionWitness w;
  w.H = H;
  if (coset_shape) {
    require(std::min(A.size(), B.size()) >= 2, ErrorKind::Precondition,
            "the coset case requires min{|A|,|B|} >= 2");
    w.kind = PartitionKind::Coset;
    // smallest c with nu_c = 1; its unique representation anchors the shift
    int cstar = -1;
    AB.bits().for_each([&](int c) {
      if (cstar < 0 && rep_count(c, A, B) == 1) cstar = c;
    });
    require(cstar >= 0, ErrorKind::Internal,
            "recover_partition: no unique-representation element in a full coset");
    int a0 = -1;
    A.bits().for_each([&](int a) {
      if (a0 < 0 && B.contains(G.sub(cstar, a))) a0 = a;
    });
    w.g1 = a0;
    w.g2 = G.sub(cstar, a0);
    w.H1 = shift(A, G.neg(w.g1)).without(0);
    w.H2 = shift(negate(B), w.g2).without(0);
    bool ok = shift(A, G.neg(w.g1)).is_subset_of(H.set()) &&
              shift(negate(B), w.g2).is_subset_of(H.set()) &&
              !w.H1.bits().intersects(w.H2.bits()) &&
              w.H1.size() + w.H2.size() + 1 == H.size();
    require(ok, ErrorKind::Internal, "recover_partition: coset partition failed");
    return w;
  }

  w.kind = PartitionKind::PuncturedCoset;
  GroupSubset coset = sumset(AB, H.set());
  GroupSubset missing = set_minus(coset, AB);
  require(missing.size() == 1, ErrorKind::Internal, "punctured coset must miss one element");
  int x0 = missing.min_element();
  bool aperA = aperiodic(A), aperB = aperiodic(B);
  GroupSubset cosetA = sumset(A, H.set());  // the H-coset containing A
  std::optional<PartitionWitness> found;
  cosetA.bits().for_each([&](int g1) {
    if (found) return;
    int g2 = G.sub(x0, g1);
    GroupSubset H1 = shift(A, G.neg(g1));
    GroupSubset H2 = shift(negate(B), g2);
    if (!H1.is_subset_of(H.set()) || !H2.is_subset_of(H.set())) return;
    if (H1.bits().intersects(H2.bits())) return;
    if (H1.size() + H2.size() != H.size()) return;
    if (!aperA || !aperB) return;
    PartitionWitness cand = w;
    cand.g1 = g1;
    cand.g2 = g2;
    cand.H1 = H1;
    cand.H2 = H2;
    found = cand;
  });
  require(found.has_value(), ErrorKind::Internal,
          "recover_partition: no punctured-coset partition found");
  return *found;
}

struct RefinementResult {
  int f = 0;    // c - g1 - g2
  Subgroup F;   // <f>
  ApWitness apA0, apB0;
  GroupSubset A0, B0;
  bool quotient_additive = false;   // |Abar+Bbar| = |Abar|+|Bbar|-1 in G/F
  bool quotient_coset = false;      // Abar+Bbar is a coset of H/F
  bool residual_additive = false;   // |A0+B0| = |A0|+|B0|-1
  bool residual_shape = false;      // A0+B0 is an F-coset / punctured F-coset
  bool unique_representation = false;

  bool all_hold() const {
    return quotient_additive && quotient_coset && residual_additive &&
           residual_shape && unique_representation;
  }
};

namespace detail {

// Split S into full F-cosets plus one progression-bearing residue.  anchor
// is the element whose coset hosts the residue when S is a union of full
// cosets.
inline GroupSubset split_residual(const GroupSubset& S, const QuotientMap& qf,
                                  int anchor) {
  std::vector<GroupSubset> partial;
  GroupSubset bar = qf.image(S);
  bar.bits().for_each([&](int cid) {
    GroupSubset part = set_intersect(S, qf.coset(cid));
    if (part.size() != qf.kernel().size()) partial.push_back(part);
  });
  require(partial.size() <= 1, ErrorKind::Internal,
          "refine_partition: set is not full cosets plus one progression");
  if (partial.size() == 1) return partial[0];
  return set_intersect(S, qf.coset(qf.apply(anchor)));
}

inline ApWitness ap_witness_with_difference(const GroupSubset& S, int f) {
  for (const ApWitness& w : ap_witnesses(S))
    if (w.d == f) return w;
  throw_internal("refine_partition: residual is not a progression with difference f");
}

}  // namespace detail

// Propositions III(iii)/IV(iii): refine a partition witness along the
// subgroup generated by f = c - g1 - g2, where c is a second
// unique-representation element.
inline RefinementResult refine_partition(const PartitionWitness& w, int c) {
  const GroupPtr& Gp = w.H.group_ptr();
  const Group& G = *Gp;
  GroupSubset A = w.rebuild_A(), B = w.rebuild_B();
  require(c >= 0 && c < G.order(), ErrorKind::Domain, "element id out of range");
  require(rep_count(c, A, B) == 1, ErrorKind::Precondition,
          "refine_partition requires nu_c(A,B) = 1");
  if (w.kind == PartitionKind::Coset)
    require(c != G.add(w.g1, w.g2), ErrorKind::Precondition,
            "the coset case requires c != g1+g2");

  RefinementResult r;
  r.f = G.sub(G.sub(c, w.g1), w.g2);
  require(w.H.contains(r.f), ErrorKind::Internal, "f = c-g1-g2 must lie in H");
  r.F = Subgroup::generated_by(Gp, {r.f});
  QuotientMap qf(Gp, r.F);

  // unique representation c = a0 + b0 anchors residues in full-coset splits
  int a0 = -1;
  A.bits().for_each([&](int a) {
    if (a0 < 0 && B.contains(G.sub(c, a))) a0 = a;
  });
  int b0 = G.sub(c, a0);
  r.A0 = detail::split_residual(A, qf, a0);
  r.B0 = detail::split_residual(B, qf, b0);
  r.apA0 = detail::ap_witness_with_difference(r.A0, r.f);
  r.apB0 = detail::ap_witness_with_difference(r.B0, r.f);

  GroupSubset Abar = qf.image(A), Bbar = qf.image(B);
  GroupSubset sumbar = sumset(Abar, Bbar);
  r.quotient_additive = sumbar.size() == Abar.size() + Bbar.size() - 1;

  // Abar+Bbar must be a coset of H/F inside G/F
  GroupSubset Hbar = qf.image(w.H.set());
  r.quotient_coset = sumbar.size() == Hbar.size() &&
                     shift(sumbar, qf.group()->neg(sumbar.min_element())) == Hbar;

  GroupSubset res = sumset(r.A0, r.B0);
  r.residual_additive = res.size() == r.A0.size() + r.B0.size() - 1;
  if (w.kind == PartitionKind::Coset)
    r.residual_shape = qf.image(res).size() == 1 && res.size() == r.F.size();
  else
    r.residual_shape = qf.image(res).size() == 1 && res.size() == r.F.size() - 1;

  int cbar = qf.group()->add(qf.apply(r.A0.min_element()), qf.apply(r.B0.min_element()));
  r.unique_representation = rep_count(cbar, Abar, Bbar) == 1;
  return r;
}

}  // namespace sumsets
