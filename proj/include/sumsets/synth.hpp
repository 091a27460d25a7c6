#pragma once

#include <random>

#include "sumsets/decompose.hpp"

namespace sumsets {

using Rng = std::mt19937_64;

namespace detail {

inline int pick(Rng& rng, int n) {
  return (int)std::uniform_int_distribution<long long>(0, n - 1)(rng);
}

inline int pick_element(Rng& rng, const GroupSubset& s) {
  int k = pick(rng, s.size());
  int chosen = -1, i = 0;
  s.bits().for_each([&](int id) {
    if (i++ == k) chosen = id;
  });
  return chosen;
}

inline GroupSubset random_nonempty_subset(Rng& rng, const GroupPtr& g) {
  GroupSubset s(g);
  while (s.empty()) {
    for (int i = 0; i < g->order(); ++i)
      if (rng() & 1) s.bits_mut().set(i);
  }
  return s;
}

// One attempt at a random pair built from a type recipe; the caller
// validates with classify_elementary.
inline std::pair<GroupSubset, GroupSubset> random_pair_attempt(Rng& rng,
                                                               const GroupPtr& g) {
  const Group& G = *g;
  switch (pick(rng, 4)) {
    case 0: {  // singleton side
      GroupSubset single = GroupSubset::single(g, pick(rng, G.order()));
      GroupSubset other = random_nonempty_subset(rng, g);
      return rng() & 1 ? std::pair{single, other} : std::pair{other, single};
    }
    case 1: {  // progressions with a common difference
      int d = pick(rng, G.order());
      long long m = element_order(G, d);
      int ka = 1 + pick(rng, (int)m);
      int kb = 1 + pick(rng, (int)(m - ka + 1));
      ApWitness wa{pick(rng, G.order()), d, ka};
      ApWitness wb{pick(rng, G.order()), d, kb};
      return {ap_set(g, wa), ap_set(g, wb)};
    }
    case 2: {  // punctured-subgroup partition
      auto subs = all_subgroups(g);
      const Subgroup& H = subs[pick(rng, (int)subs.size())];
      if (H.size() < 3) return {GroupSubset::single(g, 0), GroupSubset::single(g, 0)};
      GroupSubset H1(g), H2(g);
      H.bits().for_each([&](int h) {
        if (h == 0) return;
        (rng() & 1 ? H1 : H2).bits_mut().set(h);
      });
      if (H1.empty() || H2.empty()) return {GroupSubset::single(g, 0), GroupSubset::single(g, 0)};
      int g1 = pick(rng, G.order()), g2 = pick(rng, G.order());
      return {shift(H1.with(0), g1), shift(negate(H2.with(0)), g2)};
    }
    default: {  // aperiodic partition of a full subgroup
      auto subs = all_subgroups(g);
      const Subgroup& H = subs[pick(rng, (int)subs.size())];
      if (H.size() < 2) return {GroupSubset::single(g, 0), GroupSubset::single(g, 0)};
      GroupSubset H1(g), H2(g);
      H.bits().for_each([&](int h) { (rng() & 1 ? H1 : H2).bits_mut().set(h); });
      if (H1.empty() || H2.empty()) return {GroupSubset::single(g, 0), GroupSubset::single(g, 0)};
      int g1 = pick(rng, G.order()), g2 = pick(rng, G.order());
      return {shift(H1, g1), shift(negate(H2), g2)};
    }
  }
}

}  // namespace detail

// A random elementary pair; when unique_rep is set the pair also has an
// element with exactly one representation (needed for roots of dual
// certificates).  Falls back to a singleton pair, which always qualifies.
inline std::pair<GroupSubset, GroupSubset> random_elementary_pair(Rng& rng,
                                                                  const GroupPtr& g,
                                                                  bool unique_rep) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    auto [A, B] = detail::random_pair_attempt(rng, g);
    if (!is_elementary(A, B)) continue;
    if (unique_rep && min_rep(A, B) != 1) continue;
    return {A, B};
  }
  GroupSubset single = GroupSubset::single(g, detail::pick(rng, g->order()));
  GroupSubset other = GroupSubset::single(g, detail::pick(rng, g->order()));
  return {single, other};
}

struct SynthesizedDualPair {
  GroupSubset A, B;
  DualCertificate certificate;  // split form witnessing the construction
};

// Theorem-dual sufficiency data: an elementary root pair in G/H is lifted
// in full (lift_pair with empty deletions), then the unique-representation
// coset pair is replaced by a shifted elementary residual inside H.
inline std::optional<SynthesizedDualPair> synthesize_dual_pair(Rng& rng,
                                                               const GroupPtr& g) {
  std::vector<Subgroup> candidates;
  for (const Subgroup& h : all_subgroups(g))
    if (!h.is_trivial() && !h.is_whole()) candidates.push_back(h);
  if (candidates.empty()) return std::nullopt;
  const Subgroup& H = candidates[detail::pick(rng, (int)candidates.size())];
  QuotientMap q(g, H);

  auto [Abar, Bbar] = random_elementary_pair(rng, q.group(), /*unique_rep=*/true);
  // elementary pairs satisfy (1.1) with equality, as lift_pair requires
  auto [Afull, Bfull] = lift_pair(q, Abar, Bbar, GroupSubset(g), GroupSubset(g));

  std::vector<int> unique_cs;
  GroupSubset sumbar = sumset(Abar, Bbar);
  sumbar.bits().for_each([&](int c) {
    if (rep_count(c, Abar, Bbar) == 1) unique_cs.push_back(c);
  });
  int cbar = unique_cs[detail::pick(rng, (int)unique_cs.size())];
  int abar = -1;
  Abar.bits().for_each([&](int a) {
    if (abar < 0 && Bbar.contains(q.group()->sub(cbar, a))) abar = a;
  });
  int bbar = q.group()->sub(cbar, abar);

  // elementary residual inside H, shifted into the residual cosets
  GroupPtr Hg = H.as_group();
  auto [A0v, B0v] = random_elementary_pair(rng, Hg, /*unique_rep=*/false);
  GroupSubset A0 = shift(embed_in_base(A0v), detail::pick_element(rng, q.coset(abar)));
  GroupSubset B0 = shift(embed_in_base(B0v), detail::pick_element(rng, q.coset(bbar)));

  SynthesizedDualPair out{
      set_union(set_minus(Afull, q.coset(abar)), A0),
      set_union(set_minus(Bfull, q.coset(bbar)), B0),
      DualCertificate{}};
  out.certificate.split = DualSplit{H, A0, B0};
  return out;
}

}  // namespace sumsets
