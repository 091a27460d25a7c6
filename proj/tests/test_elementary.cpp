#include "tests/helpers.hpp"

using namespace sumsets;
using testutil::all_nonempty_subsets;
using testutil::make_set;
using testutil::zset;

namespace {

bool has_ap(const std::vector<ApWitness>& ws, int g, int d) {
  for (const auto& w : ws)
    if (w.g == g && w.d == d) return true;
  return false;
}

}  // namespace

TEST_CASE("ap_witnesses matches frozen examples and the oracle") {
  auto z7 = parse_group("Z7");
  auto w7 = ap_witnesses(zset(z7, {0, 1, 2}));
  CHECK(has_ap(w7, 6, 1));
  CHECK(has_ap(w7, 3, 6));

  auto z5 = parse_group("Z5");
  auto w5 = ap_witnesses(zset(z5, {0, 1, 4}));
  CHECK(has_ap(w5, 3, 1));

  auto z6 = parse_group("Z6");
  CHECK(ap_witnesses(zset(z6, {0, 1, 3, 4})).empty());

  for (const char* spec : {"Z7", "Z6", "Z2xZ4"}) {
    auto g = parse_group(spec);
    for (const auto& A : all_nonempty_subsets(g)) {
      auto got = ap_witnesses(A);
      // sorted, duplicate-free
      for (size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1] < got[i]);
      std::set<std::pair<std::vector<int>, std::vector<int>>> got_pairs;
      for (const auto& w : got)
        got_pairs.insert({g->coords(w.g), g->coords(w.d)});
      CHECK(got_pairs == oracle::ap_witnesses(g->moduli(), testutil::to_oracle(A)));
    }
  }
}

TEST_CASE("singletons admit a witness for every difference") {
  auto g = parse_group("Z5");
  auto ws = ap_witnesses(zset(g, {3}));
  CHECK(ws.size() == 5);
  for (const auto& w : ws) {
    CHECK(w.k == 1);
    CHECK(g->add(w.g, w.d) == 3);
  }
}

TEST_CASE("classify: singleton pairs are type I (and II)") {
  auto z5 = parse_group("Z5");
  auto ws = classify_elementary(zset(z5, {0}), zset(z5, {0, 1}));
  REQUIRE_FALSE(ws.empty());
  CHECK(canonical_type(ws) == 1);
  CHECK(std::get<WitnessI>(ws.front()).side == 'A');
  bool has_ii = false;
  for (const auto& w : ws)
    if (witness_type(w) == 2) has_ii = true;
  CHECK(has_ii);
}

TEST_CASE("classify: Z5 punctured-subgroup pair is type III") {
  auto z5 = parse_group("Z5");
  GroupSubset A = zset(z5, {0, 1, 4}), B = zset(z5, {0, 2, 3});
  auto ws = classify_elementary(A, B);
  REQUIRE_FALSE(ws.empty());
  bool found = false;
  for (const auto& w : ws) {
    auto* w3 = std::get_if<WitnessIII>(&w);
    if (!w3) continue;
    if (w3->g1 == 0 && w3->g2 == 0 && w3->H.is_whole() &&
        w3->H1.ids() == std::vector<int>{1, 4} &&
        w3->H2.ids() == std::vector<int>{2, 3})
      found = true;
    CHECK(check_elementary_witness(A, B, w));
  }
  CHECK(found);
  CHECK(canonical_type(ws) == 3);
}

TEST_CASE("classify: antisymmetric self-pair in (Z2)^3 is type IV") {
  auto e3 = parse_group("Z2xZ2xZ2");
  GroupSubset A = make_set(e3, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
  auto ws = classify_elementary(A, A);
  REQUIRE_FALSE(ws.empty());
  CHECK(canonical_type(ws) == 4);
  bool found = false;
  for (const auto& w : ws) {
    auto* w4 = std::get_if<WitnessIV>(&w);
    if (!w4) continue;
    CHECK(check_elementary_witness(A, A, w));
    if (w4->g1 == 0 && w4->g2 == e3->id_from_coords({0, 0, 1}) && w4->H1 == A)
      found = true;
  }
  CHECK(found);
  CHECK(min_rep(A, A) == 2);
}

TEST_CASE("classify: Z6 pair satisfying (1.1) without any type") {
  auto z6 = parse_group("Z6");
  GroupSubset A = zset(z6, {0, 1, 3, 4});
  CHECK(small_sumset_holds(A, A));
  CHECK(classify_elementary(A, A).empty());
}

TEST_CASE("check_elementary_witness rejects tampered witnesses") {
  auto z5 = parse_group("Z5");
  GroupSubset A = zset(z5, {0, 1, 4}), B = zset(z5, {0, 2, 3});
  WitnessIII good{0, 0, Subgroup::whole(z5), zset(z5, {1, 4}), zset(z5, {2, 3})};
  CHECK(check_elementary_witness(A, B, good));

  WitnessIII swapped{0, 0, Subgroup::whole(z5), zset(z5, {2, 3}), zset(z5, {1, 4})};
  CHECK_FALSE(check_elementary_witness(A, B, swapped));

  // order(d) one short of |A|+|B|-1
  auto z6 = parse_group("Z6");
  GroupSubset C = zset(z6, {0, 2}), D = zset(z6, {0, 2, 4});
  WitnessII forged{{4, 2, 2}, {4, 2, 3}};
  CHECK(ap_set(z6, forged.apA) == C);
  CHECK(ap_set(z6, forged.apB) == D);
  CHECK_FALSE(check_elementary_witness(C, D, forged));  // order(2)=3 < 4
}

TEST_CASE("classify output always validates; checker finds nothing extra") {
  // generative cross-check over the full witness space of small groups
  for (const char* spec : {"Z5", "Z6", "Z2xZ2", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2"}) {
    auto g = parse_group(spec);
    auto subsets = all_nonempty_subsets(g);

    // every emitted witness validates
    for (const auto& A : subsets)
      for (const auto& B : subsets) {
        for (const auto& w : classify_elementary(A, B))
          REQUIRE(check_elementary_witness(A, B, w));
      }

    // independently enumerated type II witnesses are all found
    for (int d = 0; d < g->order(); ++d) {
      long long ord = element_order(*g, d);
      for (int ka = 1; ka <= ord; ++ka)
        for (int kb = 1; ka + kb - 1 <= ord; ++kb)
          for (int ga = 0; ga < g->order(); ++ga)
            for (int gb = 0; gb < g->order(); ++gb) {
              WitnessII w{{ga, d, ka}, {gb, d, kb}};
              GroupSubset A = ap_set(g, w.apA), B = ap_set(g, w.apB);
              if (!check_elementary_witness(A, B, w)) continue;
              bool present = false;
              for (const auto& cand : classify_elementary(A, B)) {
                auto* x = std::get_if<WitnessII>(&cand);
                if (x && x->apA.g == ga && x->apB.g == gb && x->apA.d == d)
                  present = true;
              }
              REQUIRE(present);
            }
    }

    // independently enumerated type III/IV witnesses are all found
    for (const Subgroup& H : all_subgroups(g)) {
      if (H.size() < 2) continue;
      auto ids = H.set().ids();
      const int hn = H.size();
      for (uint32_t m = 0; m < (1u << (hn - 1)); ++m) {
        // split H\{0} by the mask (ids[0] == 0)
        GroupSubset H1(g), H2(g);
        for (int i = 1; i < hn; ++i)
          ((m >> (i - 1)) & 1 ? H1 : H2).bits_mut().set(ids[i]);
        if (H1.empty() || H2.empty()) continue;
        for (int g1 = 0; g1 < g->order(); ++g1)
          for (int g2 = 0; g2 < g->order(); ++g2) {
            // type III candidate
            GroupSubset A3 = shift(H1.with(0), g1);
            GroupSubset B3 = shift(negate(H2.with(0)), g2);
            WitnessIII w3{g1, g2, H, H1, H2};
            if (check_elementary_witness(A3, B3, w3)) {
              auto ws = classify_elementary(A3, B3);
              bool present = false;
              for (const auto& w : ws) {
                auto* x = std::get_if<WitnessIII>(&w);
                if (x && x->g1 == g1 && x->g2 == g2 && x->H == H && x->H1 == H1 &&
                    x->H2 == H2)
                  present = true;
              }
              CHECK(present);
            }
            // type IV candidate
            GroupSubset A4 = shift(H1, g1);
            GroupSubset B4 = shift(negate(H2), g2);
            WitnessIV w4{g1, g2, H, H1, H2};
            if (check_elementary_witness(A4, B4, w4)) {
              auto ws = classify_elementary(A4, B4);
              bool present = false;
              for (const auto& w : ws) {
                auto* x = std::get_if<WitnessIV>(&w);
                if (x && x->g1 == g1 && x->g2 == g2 && x->H == H && x->H1 == H1 &&
                    x->H2 == H2)
                  present = true;
              }
              CHECK(present);
            }
          }
      }
    }
  }
}

TEST_CASE("elementary pairs satisfy (1.1) and (2.1) with equality") {
  for (const char* spec : {"Z6", "Z8", "Z2xZ4", "Z3xZ3"}) {
    auto g = parse_group(spec);
    auto subsets = all_nonempty_subsets(g);
    for (size_t i = 0; i < subsets.size(); i += 2)
      for (size_t j = 0; j < subsets.size(); j += 2) {
        if (classify_elementary(subsets[i], subsets[j]).empty()) continue;
        long long s = sumset(subsets[i], subsets[j]).size();
        CHECK(s == subsets[i].size() + subsets[j].size() - 1);
        CHECK(kemperman_condition(subsets[i], subsets[j]));
      }
  }
}

TEST_CASE("witness lists are stable under subgroup restriction") {
  struct CasePair {
    const char* ambient;
    std::vector<int> gens;
  };
  for (const auto& [ambient, gens] : std::vector<CasePair>{{"Z6", {2}}, {"Z12", {2}}, {"Z2xZ2xZ2", {1, 2}}}) {
    auto g = parse_group(ambient);
    Subgroup F = Subgroup::generated_by(g, gens);
    GroupPtr view = F.as_group();
    auto inner_subsets = all_nonempty_subsets(view);
    for (const auto& A_in : inner_subsets)
      for (const auto& B_in : inner_subsets) {
        auto ws_inner = classify_elementary(A_in, B_in);
        GroupSubset A = embed_in_base(A_in), B = embed_in_base(B_in);
        auto ws_outer = classify_elementary(A, B);
        // same multiset of types with all data inside F
        std::multiset<int> t_in, t_out_restricted;
        for (const auto& w : ws_inner) t_in.insert(witness_type(w));
        for (const auto& w : ws_outer) {
          bool inside = true;
          if (auto* w3 = std::get_if<WitnessIII>(&w))
            inside = w3->H.set().is_subset_of(F.set());
          else if (auto* w4 = std::get_if<WitnessIV>(&w))
            inside = w4->H.set().is_subset_of(F.set());
          else if (auto* w2 = std::get_if<WitnessII>(&w))
            inside = F.contains(w2->apA.d) && F.contains(w2->apA.g) && F.contains(w2->apB.g);
          if (inside) t_out_restricted.insert(witness_type(w));
        }
        CHECK(t_in == t_out_restricted);
        CHECK(ws_inner.empty() == ws_outer.empty());
      }
  }
}
