#pragma once

#include <atomic>
#include <sstream>
#include <thread>

#include "sumsets/serialize.hpp"
#include "sumsets/synth.hpp"

namespace sumsets {

// Exhaustive verification suites.  Each suite is a pure function of
// (group, seed); the scan harness fans suites out over a catalog and
// merges results in a fixed order, so output never depends on scheduling.

struct SuiteResult {
  std::string suite;
  std::string group_spec;
  long long checks = 0;
  long long violations = 0;
  bool skipped = false;
};

struct ScanConfig {
  std::vector<std::string> catalog;
  std::vector<std::string> suites;  // resolved names, see all_suite_names()
  int max_order = 512;              // catalog guard, hard cap 512
  int jobs = 1;
  uint64_t seed = 0;
  int sufficiency_per_group = 1500;
  long long synth_budget = 100000;  // struct-synthesis instance cap
  int min_size = 1;                 // pair filters
  int max_size = 1 << 30;
};

inline const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {
      "kneser", "kemperman_scherk", "kemperman",    "sufficiency",
      "dual",   "me",               "struct",       "lemmas",
      "thick",  "hampla",           "appendix",     "prior_bounds"};
  return names;
}

namespace detail {

inline uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::vector<GroupSubset> nonempty_subsets(const GroupPtr& g, int min_size,
                                                 int max_size) {
  const int n = g->order();
  std::vector<GroupSubset> out;
  out.reserve((size_t)1 << n);
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    int sz = std::popcount(mask);
    if (sz < min_size || sz > max_size) continue;
    GroupSubset s(g);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.bits_mut().set(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

// --- individual suites -------------------------------------------------------

// Kneser identity |A+B| = |A+H|+|B+H|-|H| with H = pi(A+B) on every pair
// satisfying (1.1).
inline SuiteResult suite_kneser(const GroupPtr& g, const ScanConfig& cfg) {
  SuiteResult r{"kneser", g->spec()};
  if (g->trivial() || g->order() > 10) {
    r.skipped = true;
    return r;
  }
  auto subsets = detail::nonempty_subsets(g, cfg.min_size, cfg.max_size);
  for (const auto& A : subsets)
    for (const auto& B : subsets) {
      GroupSubset AB = sumset(A, B);
      if (AB.size() > A.size() + B.size() - 1) continue;
      ++r.checks;
      Subgroup H = period(AB);
      long long rhs = sumset(A, H.set()).size() + sumset(B, H.set()).size() - H.size();
      if (AB.size() != rhs) ++r.violations;
    }
  return r;
}

// |A+B| >= |A|+|B|-mu(A,B) on every pair.
inline SuiteResult suite_kemperman_scherk(const GroupPtr& g, const ScanConfig& cfg) {
  SuiteResult r{"kemperman_scherk", g->spec()};
  if (g->trivial() || g->order() > 10) {
    r.skipped = true;
    return r;
  }
  auto subsets = detail::nonempty_subsets(g, cfg.min_size, cfg.max_size);
  for (const auto& A : subsets)
    for (const auto& B : subsets) {
      ++r.checks;
      if (sumset(A, B).size() < A.size() + B.size() - min_rep(A, B)) ++r.violations;
    }
  return r;
}

// Kemperman necessity: every pair under (1.1)+(2.1) yields a certificate
// that re-validates clause by clause, and attains equality in (1.1).
inline SuiteResult suite_kemperman(const GroupPtr& g, const ScanConfig& cfg) {
  SuiteResult r{"kemperman", g->spec()};
  if (g->trivial() || g->order() > 8) {
    r.skipped = true;
    return r;
  }
  auto subsets = detail::nonempty_subsets(g, cfg.min_size, cfg.max_size);
  for (const auto& A : subsets)
    for (const auto& B : subsets) {
      if (!small_sumset_holds(A, B) || !kemperman_condition(A, B)) continue;
      ++r.checks;
      try {
        KempermanCertificate cert = kemperman_decompose(A, B);
        if (!check_certificate(A, B, cert).ok) ++r.violations;
        else if (sumset(A, B).size() != A.size() + B.size() - 1) ++r.violations;
      } catch (const Error&) {
        ++r.violations;
      }
    }
  return r;
}

// Theorem dual: certificate exists and re-validates on the same scope.
inline SuiteResult suite_dual(const GroupPtr& g, const ScanConfig& cfg) {
  SuiteResult r{"dual", g->spec()};
  if (g->trivial() || g->order() > 8) {
    r.skipped = true;
    return r;
  }
  auto subsets = detail::nonempty_subsets(g, cfg.min_size, cfg.max_size);
  for (const auto& A : subsets)
    for (const auto& B : subsets) {
      if (!small_sumset_holds(A, B) || !kemperman_condition(A, B)) continue;
      ++r.checks;
      try {
        DualCertificate cert = dual_decompose(A, B);
        if (!check_certificate(A, B, cert).ok) ++r.violations;
      } catch (const Error&) {
        ++r.violations;
      }
    }
  return r;
}

// Theorem me: on (1.1) plus (A+B != G or mu = 1), the ascent yields a
// proper H with all three defects <= |H|-1 and an elementary quotient pair.
inline SuiteResult suite_me(const GroupPtr& g, const ScanConfig& cfg) {
  SuiteResult r{"me", g->spec()};
  if (g->trivial() || g->order() > 8) {
    r.skipped = true;
    return r;
  }
  auto subsets = detail::nonempty_subsets(g, cfg.min_size, cfg.max_size);
  for (const auto& A : subsets)
    for (const auto& B : subsets) {
      if (!small_sumset_holds(A, B)) continue;
      if (sumset(A, B).size() == g->order() && min_rep(A, B) != 1) continue;
      ++r.checks;
      try {
        MeCertificate cert = me_decompose(A, B);
        if (!check_certificate(A, B, cert).ok) ++r.violations;
      } catch (const Error&) {
        ++r.violations;
      }
    }
  return r;
}

// Sufficiency: seeded random dual certificates reconstruct pairs that
// satisfy (1.1) and (2.1), and the synthesized split re-validates.
inline SuiteResult suite_sufficiency(const GroupPtr& g, const ScanConfig& cfg,
                                     int instances = -1) {
  SuiteResult r{"sufficiency", g->spec()};
  if (g->trivial() || g->order() > 16) {
    r.skipped = true;
    return r;
  }
  if (instances < 0) instances = cfg.sufficiency_per_group;
  Rng rng(cfg.seed ^ detail::fnv1a("sufficiency:" + g->spec()));
  for (int i = 0; i < instances; ++i) {
    auto synth = synthesize_dual_pair(rng, g);
    if (!synth) {
      r.skipped = true;  // no non-zero proper subgroup to split along
      return r;
    }
    ++r.checks;
    if (!small_sumset_holds(synth->A, synth->B) ||
        !kemperman_condition(synth->A, synth->B) ||
        !check_certificate(synth->A, synth->B, synth->certificate).ok)
      ++r.violations;
  }
  return r;
}

namespace detail {

inline bool validate_struct_classification(const GroupSubset& A,
                                           const StructClassification& c) {
  const Group& G = A.group();
  GroupSubset twoA = double_set(A);
  if (c.case_i) {
    const Subgroup& H = c.case_i->H;
    if (!is_subgroup_bits(G, H.bits())) return false;
    QuotientMap q(A.group_ptr(), H);
    return q.image(A).size() == 1 && 2 * A.size() > H.size();
  }
  if (!c.case_ii) return false;
  const StructCaseII& s = *c.case_ii;
  if (!is_subgroup_bits(G, s.F.bits()) || !is_subgroup_bits(G, s.H.bits())) return false;
  if (s.F.size() < 8) return false;
  if ((s.F.bits() & s.H.bits()).count() != 1) return false;
  if (!s.S.is_subset_of(s.F.set()) || !aperiodic(s.S)) return false;
  if (!is_antisymmetric_in(s.S, s.F)) return false;
  GroupSubset cover = shift(sumset(s.S, s.H.set()), s.shift_elem);
  if (!(set_minus(cover, s.removed) == A)) return false;
  if (2 * s.removed.size() >= s.H.size()) return false;
  return twoA.size() == (long long)(s.F.size() - 1) * s.H.size();
}

}  // namespace detail

// Theorem struct, both directions: exhaustive classification of small
// doubling sets, plus synthesized instances (all of them up to the budget,
// seeded sampling beyond it).
inline SuiteResult suite_struct(const GroupPtr& g, const ScanConfig& cfg) {
  SuiteResult r{"struct", g->spec()};
  if (g->trivial() || !g->exponent_two() || g->order() > 16) {
    r.skipped = true;
    return r;
  }
  const int n = g->order();
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    GroupSubset A(g);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) A.bits_mut().set(i);
    if (double_set(A).size() >= 2 * A.size()) continue;
    ++r.checks;
    try {
      StructClassification c = struct_classify(A);
      if (!detail::validate_struct_classification(A, c)) ++r.violations;
    } catch (const Error&) {
      ++r.violations;
    }
  }

  // converse: enumerate (F, H, S, removed) instances with shift 0
  long long total = 0;
  auto subgroups = all_subgroups(g);
  auto antisym_sets = [&](const Subgroup& F) {
    std::vector<GroupSubset> sets;
    const int fn = F.size();
    auto ids = F.set().ids();
    for (uint32_t m = 1; m < (1u << fn); ++m) {
      GroupSubset S(g);
      for (int i = 0; i < fn; ++i)
        if ((m >> i) & 1) S.bits_mut().set(ids[i]);
      if (2 * S.size() == fn && is_antisymmetric_in(S, F)) sets.push_back(std::move(S));
    }
    return sets;
  };
  struct Slot {
    const Subgroup *F, *H;
    std::vector<GroupSubset> sets;
    std::vector<std::vector<int>> cover_ids;  // per S: ids of S+H
    long long removal_choices_total = 0;
  };
  std::vector<Slot> slots;
  for (const Subgroup& F : subgroups) {
    if (F.is_trivial()) continue;
    auto sets = antisym_sets(F);
    if (sets.empty()) continue;
    for (const Subgroup& H : subgroups) {
      if ((F.bits() & H.bits()).count() != 1) continue;
      Slot slot{&F, &H, sets, {}, 0};
      int budget = (H.size() - 1) / 2;  // |removed| < |H|/2
      for (const GroupSubset& S : sets) {
        auto cover = sumset(S, H.set());
        long long choices = 0, binom = 1;
        for (int t = 0; t <= budget; ++t) {
          choices += binom;
          binom = binom * (cover.size() - t) / (t + 1);
        }
        slot.cover_ids.push_back(cover.ids());
        slot.removal_choices_total += choices;
      }
      total += slot.removal_choices_total;
      slots.push_back(std::move(slot));
    }
  }
  Rng rng(cfg.seed ^ detail::fnv1a("struct:" + g->spec()));
  double keep = total <= cfg.synth_budget ? 1.0 : (double)cfg.synth_budget / (double)total;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const Slot& slot : slots) {
    int budget = (slot.H->size() - 1) / 2;
    for (size_t si = 0; si < slot.sets.size(); ++si) {
      const auto& cover_ids = slot.cover_ids[si];
      // enumerate removal subsets of size <= budget
      std::vector<std::vector<int>> removals{{}};
      for (int t = 1; t <= budget; ++t) {
        std::vector<int> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = i;
        while (true) {
          std::vector<int> rem(t);
          for (int i = 0; i < t; ++i) rem[i] = cover_ids[idx[i]];
          removals.push_back(std::move(rem));
          int pos = t - 1;
          while (pos >= 0 && idx[pos] == (int)cover_ids.size() - t + pos) --pos;
          if (pos < 0) break;
          ++idx[pos];
          for (int i = pos + 1; i < t; ++i) idx[i] = idx[i - 1] + 1;
        }
      }
      for (const auto& rem : removals) {
        if (keep < 1.0 && unit(rng) > keep) continue;
        ++r.checks;
        try {
          GroupSubset removed(g, rem);
          auto [A, predicted] = struct_synthesize(*slot.F, *slot.H, slot.sets[si], 0, removed);
          if (double_set(A).size() != predicted || predicted >= 2LL * A.size())
            ++r.violations;
        } catch (const Error&) {
          ++r.violations;
        }
      }
    }
  }
  return r;
}

// Lemma suite: antisym (2S = H \ (h0 + pi(S))), smdbel/elemstr
// (|2A| < 2|A| <=> (A,A) elementary, via the selfpair construction), and
// mu(A,A) >= 2.
inline SuiteResult suite_lemmas(const GroupPtr& g, const ScanConfig& cfg) {
  (void)cfg;
  SuiteResult r{"lemmas", g->spec()};
  if (g->trivial() || !g->exponent_two() || g->order() > 16) {
    r.skipped = true;
    return r;
  }
  const int n = g->order();

  // Lemma antisym, exhaustive over subgroups and antisymmetric subsets
  if (n <= 8) {
    for (const Subgroup& H : all_subgroups(g)) {
      auto ids = H.set().ids();
      H.bits().for_each([&](int h0) {
        if (h0 == 0) return;
        // pick one element from each pair {h, h+h0}
        std::vector<std::pair<int, int>> pairs;
        DynBitset seen(g->order());
        for (int h : ids) {
          if (seen.test(h)) continue;
          int mate = g->add(h, h0);
          seen.set(h);
          seen.set(mate);
          pairs.emplace_back(h, mate);
        }
        for (uint32_t m = 0; m < (1u << pairs.size()); ++m) {
          GroupSubset S(g);
          for (size_t i = 0; i < pairs.size(); ++i)
            S.bits_mut().set((m >> i) & 1 ? pairs[i].second : pairs[i].first);
          ++r.checks;
          GroupSubset expect = set_minus(H.set(), shift(period(S).set(), h0));
          if (!(double_set(S) == expect)) ++r.violations;
        }
      });
    }
  }

  // smdbel + elemstr + mu(A,A) >= 2, exhaustive over subsets
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    GroupSubset A(g);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) A.bits_mut().set(i);
    GroupSubset twoA = double_set(A);
    auto self = selfpair_witness(A);
    bool elementary = is_elementary(A, A);

    // elemstr: witness presence <=> elementary
    ++r.checks;
    if (self.has_value() != elementary) ++r.violations;
    if (self) {
      ++r.checks;
      GroupSubset rebuilt = shift(self->S, self->g);
      bool witness_ok = rebuilt == A && aperiodic(self->S) &&
                        self->S.is_subset_of(self->H.set()) &&
                        !antisym_witnesses(self->S, self->H).empty();
      if (!witness_ok) ++r.violations;
    }

    // smdbel: under pi(2A) = {0}, small doubling <=> elementary
    if (aperiodic(twoA)) {
      ++r.checks;
      if ((twoA.size() < 2 * A.size()) != elementary) ++r.violations;
    }

    // mu(A,A) >= 2 whenever |A| >= 2
    if (A.size() >= 2) {
      ++r.checks;
      if (min_rep(A, A) < 2) ++r.violations;
    }
  }
  return r;
}

// Theorem thick: reduction succeeds for every |A| <= |G|/2 and the claimed
// branch re-validates by brute force.
inline SuiteResult suite_thick(const GroupPtr& g, const ScanConfig& cfg) {
  SuiteResult r{"thick", g->spec()};
  if (g->trivial() || g->order() > 10) {
    r.skipped = true;
    return r;
  }
  auto subsets = detail::nonempty_subsets(g, cfg.min_size, cfg.max_size);
  for (const auto& A : subsets) {
    if (2 * A.size() > g->order()) continue;
    ++r.checks;
    try {
      auto [H, branch] = thick_reduction(A);
      QuotientMap q(g, H);
      GroupSubset Abar = q.image(A);
      bool ok = saturation_defect(A, H) <= H.size() - 1 &&
                sumset(A, H.set()).size() != g->order();
      if (branch == ThickBranch::Ap)
        ok = ok && is_arithmetic_progression(Abar);
      else
        ok = ok && is_thick_component(Abar);
      if (!ok) ++r.violations;
    } catch (const Error&) {
      ++r.violations;
    }
  }
  return r;
}

// Theorem hampla: a validated branch witness for every qualifying pair.
inline SuiteResult suite_hampla(const GroupPtr& g, const ScanConfig& cfg) {
  SuiteResult r{"hampla", g->spec()};
  if (g->trivial() || g->order() > 8) {
    r.skipped = true;
    return r;
  }
  auto subsets = detail::nonempty_subsets(g, cfg.min_size, cfg.max_size);
  for (const auto& A : subsets)
    for (const auto& B : subsets) {
      if (B.size() < 2) continue;
      GroupSubset AB = sumset(A, B);
      if (AB.size() > A.size() + B.size() - 1) continue;
      if (AB.size() > g->order() - 2) continue;
      ++r.checks;
      try {
        VerificationReport rep = hampla_structure(A, B);
        bool ok = rep.conclusion_holds;
        if (ok && rep.witness["branch"] == "i") {
          Subgroup H = Subgroup::from_set(set_from_json(g, rep.witness["H"]));
          ok = !H.is_trivial() && saturation_defect(A, H) <= H.size() - 1 &&
               sumset(A, H.set()).size() != g->order();
        } else if (ok) {
          Subgroup H = Subgroup::from_set(set_from_json(g, rep.witness["H"]));
          GroupSubset A0 = set_from_json(g, rep.witness["A0"]);
          GroupSubset rebuilt = A0;
          for (const auto& ge : rep.witness["gs"])
            rebuilt = set_union(rebuilt, shift(H.set(), element_from_json(*g, ge)));
          ok = !H.is_trivial() && is_arithmetic_progression(A0) && rebuilt == A &&
               (int)rep.witness["gs"].size() == H.index() - 1 &&
               rebuilt.size() == A0.size() + (H.index() - 1) * H.size();
        }
        if (!ok) ++r.violations;
      } catch (const Error&) {
        ++r.violations;
      }
    }
  return r;
}

// Appendix propositions: partition recovery round-trips exactly, and every
// admissible refinement's asserted facts hold.
inline SuiteResult suite_appendix(const GroupPtr& g, const ScanConfig& cfg) {
  SuiteResult r{"appendix", g->spec()};
  if (g->trivial() || g->order() > 8) {
    r.skipped = true;
    return r;
  }
  auto subsets = detail::nonempty_subsets(g, cfg.min_size, cfg.max_size);
  auto subgroups = all_subgroups(g);
  for (const auto& A : subsets)
    for (const auto& B : subsets) {
      if (!small_sumset_holds(A, B) || !kemperman_condition(A, B)) continue;
      GroupSubset AB = sumset(A, B);
      for (const Subgroup& H : subgroups) {
        QuotientMap q(g, H);
        if (q.image(AB).size() != 1) continue;
        bool coset_shape = AB.size() == H.size() && std::min(A.size(), B.size()) >= 2;
        bool punct_shape = AB.size() == H.size() - 1;
        if (!coset_shape && !punct_shape) continue;
        ++r.checks;
        try {
          PartitionWitness w = recover_partition(A, B, H);
          if (!(w.rebuild_A() == A && w.rebuild_B() == B)) {
            ++r.violations;
            continue;
          }
          bool bad = false;
          AB.bits().for_each([&](int c) {
            if (bad || rep_count(c, A, B) != 1) return;
            if (w.kind == PartitionKind::Coset && c == g->add(w.g1, w.g2)) return;
            ++r.checks;
            RefinementResult ref = refine_partition(w, c);
            if (!ref.all_hold()) bad = true;
          });
          if (bad) ++r.violations;
        } catch (const Error&) {
          ++r.violations;
        }
      }
    }
  return r;
}

// Prior bounds: both published conclusions hold for every small-doubling
// subset, evaluated in exact rationals.
inline SuiteResult suite_prior_bounds(const GroupPtr& g, const ScanConfig& cfg) {
  (void)cfg;
  SuiteResult r{"prior_bounds", g->spec()};
  if (g->trivial() || !g->exponent_two() || g->order() > 16) {
    r.skipped = true;
    return r;
  }
  const int n = g->order();
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    GroupSubset A(g);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) A.bits_mut().set(i);
    if (double_set(A).size() >= 2 * A.size()) continue;
    ++r.checks;
    try {
      VerificationReport rep = verify_prior_bounds(A);
      if (!rep.conclusion_holds) ++r.violations;
    } catch (const Error&) {
      ++r.violations;
    }
  }
  return r;
}

// --- harness -----------------------------------------------------------------

inline SuiteResult run_suite(const std::string& suite, const GroupPtr& g,
                             const ScanConfig& cfg) {
  if (suite == "kneser") return suite_kneser(g, cfg);
  if (suite == "kemperman_scherk") return suite_kemperman_scherk(g, cfg);
  if (suite == "kemperman") return suite_kemperman(g, cfg);
  if (suite == "sufficiency") return suite_sufficiency(g, cfg);
  if (suite == "dual") return suite_dual(g, cfg);
  if (suite == "me") return suite_me(g, cfg);
  if (suite == "struct") return suite_struct(g, cfg);
  if (suite == "lemmas") return suite_lemmas(g, cfg);
  if (suite == "thick") return suite_thick(g, cfg);
  if (suite == "hampla") return suite_hampla(g, cfg);
  if (suite == "appendix") return suite_appendix(g, cfg);
  if (suite == "prior_bounds") return suite_prior_bounds(g, cfg);
  throw_usage("unknown suite '" + suite + "'");
}

// Run the whole scan; one JSONL record per (group, suite) in catalog-major
// order plus a final summary record.  Worker count never changes output.
inline std::string scan_to_jsonl(const ScanConfig& cfg) {
  require(cfg.max_order <= 512, ErrorKind::Usage, "max order is capped at 512");
  std::vector<std::string> suites =
      cfg.suites.empty() ? all_suite_names() : cfg.suites;
  for (const std::string& s : suites)
    require(std::find(all_suite_names().begin(), all_suite_names().end(), s) !=
                all_suite_names().end(),
            ErrorKind::Usage, "unknown suite '" + s + "'");

  struct Task {
    std::string spec;
    GroupPtr group;
    std::string suite;
  };
  std::vector<Task> tasks;
  for (const std::string& spec : cfg.catalog) {
    GroupPtr g = parse_group(spec);
    require(g->order() <= cfg.max_order, ErrorKind::Resource,
            "catalog group " + spec + " exceeds --max-order " +
                std::to_string(cfg.max_order));
    for (const std::string& suite : suites) tasks.push_back({spec, g, suite});
  }

  std::vector<SuiteResult> results(tasks.size());
  int jobs = std::max(1, cfg.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < tasks.size(); ++i)
      results[i] = run_suite(tasks[i].suite, tasks[i].group, cfg);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        results[i] = run_suite(tasks[i].suite, tasks[i].group, cfg);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::ostringstream out;
  long long checks = 0, violations = 0;
  Json per_suite = Json::object();
  for (size_t i = 0; i < tasks.size(); ++i) {
    results[i].group_spec = tasks[i].spec;  // echo the catalog spelling
    const SuiteResult& sr = results[i];
    Json rec{{"record", "suite"},
             {"suite", sr.suite},
             {"group", sr.group_spec},
             {"checks", sr.checks},
             {"violations", sr.violations},
             {"skipped", sr.skipped}};
    out << rec.dump() << "\n";
    checks += sr.checks;
    violations += sr.violations;
    if (!per_suite.contains(sr.suite))
      per_suite[sr.suite] = Json{{"checks", 0}, {"violations", 0}};
    per_suite[sr.suite]["checks"] = per_suite[sr.suite]["checks"].get<long long>() + sr.checks;
    per_suite[sr.suite]["violations"] =
        per_suite[sr.suite]["violations"].get<long long>() + sr.violations;
  }
  Json summary{{"record", "summary"},
               {"catalog", cfg.catalog},
               {"suites", suites},
               {"seed", cfg.seed},
               {"checks", checks},
               {"violations", violations},
               {"per_suite", per_suite}};
  out << summary.dump() << "\n";
  return out.str();
}

}  // namespace sumsets
