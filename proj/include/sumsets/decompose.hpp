#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumsets/elementary.hpp"

namespace sumsets {

struct KempermanCertificate {
  Subgroup H;          // non-zero
  GroupSubset A0, B0;  // residual parts, each inside one H-coset
};

struct DualSplit {
  Subgroup H;          // non-zero, proper
  GroupSubset A0, B0;  // residual pair satisfying (1.1) with equality + (2.1)
};

// Either the pair itself is elementary, or it splits.
struct DualCertificate {
  std::optional<ElementaryWitness> elementary;
  std::optional<DualSplit> split;
  bool is_elementary() const { return elementary.has_value(); }
};

struct MeCertificate {
  Subgroup H;  // finite proper subgroup; H = {0} is allowed
};

struct ClauseResult {
  std::string clause;
  bool holds = false;
  std::string detail;
};

struct CertCheckResult {
  bool ok = false;
  std::vector<ClauseResult> clauses;
  std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& c : clauses)
      if (!c.holds) out.push_back(c.clause);
    return out;
  }
};

namespace detail {

inline void require_decompose_hypotheses(const GroupSubset& A, const GroupSubset& B) {
  require(!A.group().trivial(), ErrorKind::Precondition,
          "decomposition requires a non-trivial group");
  require(!A.empty() && !B.empty(), ErrorKind::Domain,
          "decomposition requires non-empty sets");
  require(small_sumset_holds(A, B), ErrorKind::Precondition,
          "hypothesis (1.1) fails: |A+B| > |A|+|B|-1");
  require(kemperman_condition(A, B), ErrorKind::Precondition,
          "hypothesis (2.1) fails: pi(A+B) != {0} and mu(A,B) > 1");
}

// Residual candidates for a fixed subgroup H.  Condition (ii) pins the
// choice: every H-coset meeting the set, except the one holding the
// residual, must lie fully inside the set, and then the residual equals
// the set's intersection with its coset.
inline std::vector<GroupSubset> residual_candidates(const GroupSubset& S,
                                                    const QuotientMap& q) {
  std::vector<GroupSubset> partial, full;
  GroupSubset bar = q.image(S);
  bar.bits().for_each([&](int cid) {
    GroupSubset part = set_intersect(S, q.coset(cid));
    if (part.size() == q.kernel().size())
      full.push_back(std::move(part));
    else
      partial.push_back(std::move(part));
  });
  if (partial.size() > 1) return {};
  if (partial.size() == 1) return {partial[0]};
  return full;  // set is a union of H-cosets: any one coset may serve
}

inline std::vector<std::pair<GroupSubset, GroupSubset>> residual_pairs(
    const GroupSubset& A, const GroupSubset& B, const QuotientMap& q) {
  std::vector<std::pair<GroupSubset, GroupSubset>> out;
  for (const GroupSubset& a0 : residual_candidates(A, q))
    for (const GroupSubset& b0 : residual_candidates(B, q))
      out.emplace_back(a0, b0);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    int sx = x.first.size() + x.second.size();
    int sy = y.first.size() + y.second.size();
    if (sx != sy) return sx < sy;
    if (int c = compare_canonical(x.first, y.first)) return c < 0;
    return compare_canonical(x.second, y.second) < 0;
  });
  return out;
}

}  // namespace detail

// Kemperman's structure theorem, necessity direction: produce (H, A0, B0)
// satisfying clauses (i)-(iv).  Deterministic: smallest valid H in
// (order, element list) order, then smallest (A0, B0).
inline KempermanCertificate kemperman_decompose(const GroupSubset& A,
                                                const GroupSubset& B) {
  require_same_group(A, B);
  detail::require_decompose_hypotheses(A, B);
  const GroupPtr& Gp = A.group_ptr();
  for (const Subgroup& H : all_subgroups(Gp)) {
    if (H.is_trivial()) continue;
    QuotientMap q(Gp, H);
    GroupSubset Abar = q.image(A), Bbar = q.image(B);
    // (iii) in the quotient, independent of the residual choice
    if (sumset(Abar, Bbar).size() != Abar.size() + Bbar.size() - 1) continue;
    for (auto& [A0, B0] : detail::residual_pairs(A, B, q)) {
      // (iv): the residual coset has a unique representation in Abar+Bbar
      int cbar = q.group()->add(q.apply(A0.min_element()), q.apply(B0.min_element()));
      if (rep_count(cbar, Abar, Bbar) != 1) continue;
      // (i): the residual pair is elementary
      if (!is_elementary(A0, B0)) continue;
      return {H, A0, B0};
    }
  }
  throw_internal("kemperman_decompose: search exhausted on a qualifying pair");
}

// Theorem dual: elementary pairs are their own certificate; otherwise split
// with the roles of the residual and root pairs exchanged.
inline DualCertificate dual_decompose(const GroupSubset& A, const GroupSubset& B) {
  require_same_group(A, B);
  detail::require_decompose_hypotheses(A, B);
  auto witnesses = classify_elementary(A, B);
  if (!witnesses.empty()) {
    DualCertificate cert;
    cert.elementary = witnesses.front();
    return cert;
  }
  const GroupPtr& Gp = A.group_ptr();
  for (const Subgroup& H : all_subgroups(Gp)) {
    if (H.is_trivial() || H.is_whole()) continue;
    QuotientMap q(Gp, H);
    GroupSubset Abar = q.image(A), Bbar = q.image(B);
    // (iii) first half: the root pair is elementary
    if (!is_elementary(Abar, Bbar)) continue;
    for (auto& [A0, B0] : detail::residual_pairs(A, B, q)) {
      // (i): residual satisfies (1.1) with equality and (2.1)
      if (sumset(A0, B0).size() != A0.size() + B0.size() - 1) continue;
      if (!kemperman_condition(A0, B0)) continue;
      // (iii) second half: unique representation of the residual coset
      int cbar = q.group()->add(q.apply(A0.min_element()), q.apply(B0.min_element()));
      if (rep_count(cbar, Abar, Bbar) != 1) continue;
      DualCertificate cert;
      cert.split = DualSplit{H, A0, B0};
      return cert;
    }
  }
  throw_internal("dual_decompose: search exhausted on a qualifying pair");
}

// Theorem me: ascend from H = {0}, replacing H by the strictly larger
// subgroup the proof provides, until the quotient pair is elementary.
// Conditions (a)-(c) are re-asserted after every step.
inline MeCertificate me_decompose(const GroupSubset& A, const GroupSubset& B) {
  require_same_group(A, B);
  require(!A.group().trivial(), ErrorKind::Precondition,
          "me_decompose requires a non-trivial group");
  require(!A.empty() && !B.empty(), ErrorKind::Domain,
          "me_decompose requires non-empty sets");
  require(small_sumset_holds(A, B), ErrorKind::Precondition,
          "hypothesis (1.1) fails: |A+B| > |A|+|B|-1");
  const GroupPtr& Gp = A.group_ptr();
  require(sumset(A, B).size() < Gp->order() || min_rep(A, B) == 1,
          ErrorKind::Precondition,
          "hypothesis fails: A+B = G and mu(A,B) > 1");

  Subgroup H = Subgroup::trivial(Gp);
  while (true) {
    QuotientMap q(Gp, H);
    GroupSubset Abar = q.image(A), Bbar = q.image(B);
    if (is_elementary(Abar, Bbar)) return {H};

    Subgroup F;
    if (kemperman_condition(Abar, Bbar)) {
      // Kemperman-theorem branch: pull the certificate subgroup back to G
      KempermanCertificate cert = kemperman_decompose(Abar, Bbar);
      require(!cert.H.is_whole(), ErrorKind::Internal,
              "me_decompose: whole-group certificate for a non-elementary pair");
      F = Subgroup::unchecked(q.preimage(cert.H.set()));
    } else {
      // Kneser-period branch: quotient sumset is periodic, mod out by it
      Subgroup Fbar = period(sumset(Abar, Bbar));
      require(!Fbar.is_trivial(), ErrorKind::Internal,
              "me_decompose: aperiodic quotient sumset in the period branch");
      require(!Fbar.is_whole(), ErrorKind::Internal,
              "me_decompose: period branch reached the full quotient");
      F = Subgroup::unchecked(q.preimage(Fbar.set()));
    }
    require(F.size() > H.size() && !F.is_whole(), ErrorKind::Internal,
            "me_decompose: ascent did not grow to a proper subgroup");
    // proof conditions (a')-(c') for the new subgroup
    QuotientMap qf(Gp, F);
    GroupSubset At = qf.image(A), Bt = qf.image(B);
    bool a_ok = saturation_defect(A, F) <= F.size() - 1 &&
                saturation_defect(B, F) <= F.size() - 1 &&
                saturation_defect(sumset(A, B), F) <= F.size() - 1;
    bool b_ok = sumset(At, Bt).size() < qf.group()->order() || min_rep(At, Bt) == 1;
    bool c_ok = sumset(At, Bt).size() <= At.size() + Bt.size() - 1;
    require(a_ok && b_ok && c_ok, ErrorKind::Internal,
            "me_decompose: ascent invariant (a)-(c) broken");
    H = std::move(F);
  }
}

// ---------------------------------------------------------------------------
// Independent certificate checking.

inline CertCheckResult check_certificate(const GroupSubset& A, const GroupSubset& B,
                                         const KempermanCertificate& cert) {
  CertCheckResult r;
  const GroupPtr& Gp = A.group_ptr();
  auto push = [&](const std::string& clause, bool holds, const std::string& detail) {
    r.clauses.push_back({clause, holds, detail});
  };
  if (!cert.H.group().same_as(*Gp) || !detail::is_subgroup_bits(*Gp, cert.H.bits()) ||
      cert.H.is_trivial()) {
    push("(pre)", false, "H must be a non-zero subgroup of the ambient group");
    return r;
  }
  if (cert.A0.empty() || cert.B0.empty() || !cert.A0.is_subset_of(A) ||
      !cert.B0.is_subset_of(B)) {
    push("(pre)", false, "A0, B0 must be non-empty subsets of A and B");
    return r;
  }
  push("(pre)", true, "");
  QuotientMap q(Gp, cert.H);
  GroupSubset Abar = q.image(A), Bbar = q.image(B);

  bool i_coset = q.image(cert.A0).size() == 1 && q.image(cert.B0).size() == 1;
  bool i_elem = i_coset && is_elementary(cert.A0, cert.B0);
  push("(i)", i_coset && i_elem,
       !i_coset ? "A0 or B0 spreads over several H-cosets"
                : (i_elem ? "" : "(A0,B0) is not an elementary pair"));

  GroupSubset restA = set_minus(A, cert.A0), restB = set_minus(B, cert.B0);
  bool ii_ok = is_union_of_cosets(restA, cert.H) && is_union_of_cosets(restB, cert.H);
  push("(ii)", ii_ok, ii_ok ? "" : "A\\A0 or B\\B0 is not a union of H-cosets");

  bool iii_ok = sumset(Abar, Bbar).size() == Abar.size() + Bbar.size() - 1;
  push("(iii)", iii_ok, iii_ok ? "" : "|Abar+Bbar| != |Abar|+|Bbar|-1");

  int cbar = q.group()->add(q.apply(cert.A0.min_element()), q.apply(cert.B0.min_element()));
  bool iv_ok = rep_count(cbar, Abar, Bbar) == 1;
  push("(iv)", iv_ok, iv_ok ? "" : "A0+B0+H has several representations in Abar+Bbar");

  r.ok = true;
  for (const auto& c : r.clauses) r.ok = r.ok && c.holds;
  return r;
}

inline CertCheckResult check_certificate(const GroupSubset& A, const GroupSubset& B,
                                         const DualCertificate& cert) {
  CertCheckResult r;
  const GroupPtr& Gp = A.group_ptr();
  auto push = [&](const std::string& clause, bool holds, const std::string& detail) {
    r.clauses.push_back({clause, holds, detail});
  };
  if (cert.is_elementary()) {
    bool ok = check_elementary_witness(A, B, *cert.elementary);
    push("(elementary)", ok, ok ? "" : "claimed elementary witness fails validation");
    r.ok = ok;
    return r;
  }
  if (!cert.split) {
    push("(pre)", false, "dual certificate carries neither variant");
    return r;
  }
  const DualSplit& s = *cert.split;
  if (!s.H.group().same_as(*Gp) || !detail::is_subgroup_bits(*Gp, s.H.bits()) ||
      s.H.is_trivial() || s.H.is_whole()) {
    push("(pre)", false, "H must be a non-zero proper subgroup");
    return r;
  }
  if (s.A0.empty() || s.B0.empty() || !s.A0.is_subset_of(A) || !s.B0.is_subset_of(B)) {
    push("(pre)", false, "A0, B0 must be non-empty subsets of A and B");
    return r;
  }
  push("(pre)", true, "");
  QuotientMap q(Gp, s.H);
  GroupSubset Abar = q.image(A), Bbar = q.image(B);

  bool i_coset = q.image(s.A0).size() == 1 && q.image(s.B0).size() == 1;
  bool i_eq = i_coset && sumset(s.A0, s.B0).size() == s.A0.size() + s.B0.size() - 1;
  bool i_kc = i_coset && kemperman_condition(s.A0, s.B0);
  push("(i)", i_coset && i_eq && i_kc,
       !i_coset ? "A0 or B0 spreads over several H-cosets"
                : (!i_eq ? "|A0+B0| != |A0|+|B0|-1"
                         : (i_kc ? "" : "(A0,B0) violates Kemperman's condition")));

  GroupSubset restA = set_minus(A, s.A0), restB = set_minus(B, s.B0);
  bool ii_ok = is_union_of_cosets(restA, s.H) && is_union_of_cosets(restB, s.H);
  push("(ii)", ii_ok, ii_ok ? "" : "A\\A0 or B\\B0 is not a union of H-cosets");

  bool iii_elem = is_elementary(Abar, Bbar);
  int cbar = q.group()->add(q.apply(s.A0.min_element()), q.apply(s.B0.min_element()));
  bool iii_unique = rep_count(cbar, Abar, Bbar) == 1;
  push("(iii)", iii_elem && iii_unique,
       !iii_elem ? "(Abar,Bbar) is not elementary"
                 : (iii_unique ? "" : "A0+B0+H has several representations"));

  r.ok = true;
  for (const auto& c : r.clauses) r.ok = r.ok && c.holds;
  return r;
}

inline CertCheckResult check_certificate(const GroupSubset& A, const GroupSubset& B,
                                         const MeCertificate& cert) {
  CertCheckResult r;
  const GroupPtr& Gp = A.group_ptr();
  auto push = [&](const std::string& clause, bool holds, const std::string& detail) {
    r.clauses.push_back({clause, holds, detail});
  };
  if (!cert.H.group().same_as(*Gp) || !detail::is_subgroup_bits(*Gp, cert.H.bits()) ||
      cert.H.is_whole()) {
    push("(pre)", false, "H must be a proper subgroup of the ambient group");
    return r;
  }
  push("(pre)", true, "");
  long long cap = cert.H.size() - 1;
  long long dA = saturation_defect(A, cert.H);
  long long dB = saturation_defect(B, cert.H);
  long long dAB = saturation_defect(sumset(A, B), cert.H);
  bool i_ok = dA <= cap && dB <= cap && dAB <= cap;
  push("(i)", i_ok,
       i_ok ? ""
            : "saturation defect exceeds |H|-1 (A: " + std::to_string(dA) +
                  ", B: " + std::to_string(dB) + ", A+B: " + std::to_string(dAB) + ")");
  QuotientMap q(Gp, cert.H);
  bool ii_ok = is_elementary(q.image(A), q.image(B));
  push("(ii)", ii_ok, ii_ok ? "" : "(Abar,Bbar) is not elementary in G/H");
  r.ok = true;
  for (const auto& c : r.clauses) r.ok = r.ok && c.holds;
  return r;
}

// ---------------------------------------------------------------------------
// Recursive decomposition trees.

enum class DecomposeMode { Kemperman, Dual };

// Kemperman mode recurses on the quotient (root) pair, dual mode on the
// residual pair; leaves are elementary witnesses.  Each internal node keeps
// enough data to rebuild its pair from the child pair.
struct DecompositionTree {
  DecomposeMode mode = DecomposeMode::Kemperman;
  GroupSubset A, B;  // the pair at this node, in this node's group
  std::optional<ElementaryWitness> leaf;
  std::optional<Subgroup> H;
  std::optional<GroupSubset> A0, B0;
  std::optional<QuotientMap> q;
  std::unique_ptr<DecompositionTree> child;

  bool is_leaf() const { return leaf.has_value(); }
  int depth() const { return child ? 1 + child->depth() : 1; }
  int leaf_count() const { return child ? child->leaf_count() : 1; }

  // Recompute this node's pair from the certificate and the child's
  // reassembled pair (leaves are ground truth).
  std::pair<GroupSubset, GroupSubset> reassemble() const {
    if (is_leaf()) return {A, B};
    auto sub = child->reassemble();
    if (mode == DecomposeMode::Kemperman) {
      // child carries (Abar, Bbar); lift full cosets except the residual one
      int abar = q->apply(A0->min_element());
      int bbar = q->apply(B0->min_element());
      GroupSubset Ar = set_union(q->preimage(sub.first.without(abar)), *A0);
      GroupSubset Br = set_union(q->preimage(sub.second.without(bbar)), *B0);
      return {Ar, Br};
    }
    // dual: child carries (A0, B0); complete with the full cosets of the
    // elementary root pair
    GroupSubset Abar = q->image(A), Bbar = q->image(B);
    int abar = q->apply(sub.first.min_element());
    int bbar = q->apply(sub.second.min_element());
    GroupSubset Ar = set_union(q->preimage(Abar.without(abar)), sub.first);
    GroupSubset Br = set_union(q->preimage(Bbar.without(bbar)), sub.second);
    return {Ar, Br};
  }
};

inline std::unique_ptr<DecompositionTree> decomposition_tree(const GroupSubset& A,
                                                             const GroupSubset& B,
                                                             DecomposeMode mode) {
  auto node = std::make_unique<DecompositionTree>();
  node->mode = mode;
  node->A = A;
  node->B = B;
  auto witnesses = classify_elementary(A, B);
  if (!witnesses.empty()) {
    node->leaf = witnesses.front();
    return node;
  }
  const GroupPtr& Gp = A.group_ptr();
  if (mode == DecomposeMode::Kemperman) {
    KempermanCertificate cert = kemperman_decompose(A, B);
    node->H = cert.H;
    node->A0 = cert.A0;
    node->B0 = cert.B0;
    node->q = QuotientMap(Gp, cert.H);
    node->child = decomposition_tree(node->q->image(A), node->q->image(B), mode);
  } else {
    DualCertificate cert = dual_decompose(A, B);
    const DualSplit& s = *cert.split;  // non-elementary: split variant
    require(!(s.A0 == A && s.B0 == B), ErrorKind::Internal,
            "dual decomposition made no progress");
    node->H = s.H;
    node->A0 = s.A0;
    node->B0 = s.B0;
    node->q = QuotientMap(Gp, s.H);
    node->child = decomposition_tree(s.A0, s.B0, mode);
  }
  return node;
}

}  // namespace sumsets
