#include "tests/helpers.hpp"

#include "sumsets/synth.hpp"

using namespace sumsets;
using testutil::all_nonempty_subsets;
using testutil::make_set;

TEST_CASE("antisym_witnesses examples") {
  auto e3 = parse_group("Z2xZ2xZ2");
  GroupSubset S = make_set(e3, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
  auto ws = antisym_witnesses(S, Subgroup::whole(e3));
  REQUIRE(ws.size() == 1);
  CHECK(e3->coords(ws[0]) == std::vector<int>{0, 0, 1});

  auto e2 = parse_group("Z2xZ2");
  GroupSubset S2 = make_set(e2, {{0, 0}, {0, 1}});
  auto ws2 = antisym_witnesses(S2, Subgroup::whole(e2));
  REQUIRE(ws2.size() == 2);
  CHECK(e2->coords(ws2[0]) == std::vector<int>{1, 0});
  CHECK(e2->coords(ws2[1]) == std::vector<int>{1, 1});

  CHECK(antisym_witnesses(make_set(e2, {{0, 0}}), Subgroup::whole(e2)).empty());

  auto z3 = parse_group("Z3");
  CHECK_THROWS_AS(
      antisym_witnesses(GroupSubset(z3, std::vector<int>{0}), Subgroup::whole(z3)), Error);
}

TEST_CASE("lemma antisym: 2S = H \\ (h0 + pi(S)), exhaustive on (Z2)^3") {
  auto e3 = parse_group("Z2xZ2xZ2");
  int checked = 0;
  for (const Subgroup& H : all_subgroups(e3)) {
    auto ids = H.set().ids();
    H.bits().for_each([&](int h0) {
      if (h0 == 0) return;
      // enumerate antisymmetric subsets: one pick per {h, h+h0} pair
      std::vector<std::pair<int, int>> pairs;
      DynBitset seen(e3->order());
      for (int h : ids) {
        if (seen.test(h)) continue;
        seen.set(h);
        seen.set(e3->add(h, h0));
        pairs.emplace_back(h, e3->add(h, h0));
      }
      for (uint32_t m = 0; m < (1u << pairs.size()); ++m) {
        GroupSubset S(e3);
        for (size_t i = 0; i < pairs.size(); ++i)
          S.bits_mut().set((m >> i) & 1 ? pairs[i].second : pairs[i].first);
        REQUIRE(antisym_witnesses(S, H).size() >= 1);
        GroupSubset expect = set_minus(H.set(), shift(period(S).set(), h0));
        CHECK(double_set(S) == expect);
        if (aperiodic(S))
          CHECK(double_set(S) == set_minus(H.set(), GroupSubset::single(e3, h0)));
        ++checked;
      }
    });
  }
  CHECK(checked > 0);
}

TEST_CASE("selfpair_witness examples") {
  auto e3 = parse_group("Z2xZ2xZ2");
  GroupSubset A = make_set(e3, {{1, 1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto w = selfpair_witness(A);
  REQUIRE(w.has_value());
  CHECK(e3->coords(w->g) == std::vector<int>{0, 0, 1});
  CHECK(w->S == shift(A, e3->id_from_coords({0, 0, 1})));
  CHECK(w->S.contains(0));
  CHECK(aperiodic(w->S));
  CHECK(shift(w->S, w->g) == A);
  // h0 is the unique antisymmetry witness of S in H
  auto hs = antisym_witnesses(w->S, w->H);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0] == w->h0);

  auto e2 = parse_group("Z2xZ2");
  GroupSubset single = make_set(e2, {{0, 1}});
  auto w2 = selfpair_witness(single);
  REQUIRE(w2.has_value());
  CHECK(e2->coords(w2->g) == std::vector<int>{0, 1});
  CHECK(w2->S.ids() == std::vector<int>{0});
  CHECK(w2->H.set().ids() == std::vector<int>{0, 1});  // canonical 2-element subgroup
  CHECK(e2->coords(w2->h0) == std::vector<int>{0, 1});

  CHECK_FALSE(selfpair_witness(GroupSubset::full(e2)).has_value());
}

TEST_CASE("struct_classify examples") {
  auto e2 = parse_group("Z2xZ2");
  GroupSubset A1 = make_set(e2, {{0, 0}, {0, 1}, {1, 0}});
  StructClassification c1 = struct_classify(A1);
  REQUIRE(c1.case_i.has_value());
  CHECK(c1.case_i->H.is_whole());

  auto e3 = parse_group("Z2xZ2xZ2");
  GroupSubset A2 = make_set(e3, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
  StructClassification c2 = struct_classify(A2);
  REQUIRE(c2.case_ii.has_value());
  CHECK(c2.case_ii->F.is_whole());
  CHECK(c2.case_ii->H.is_trivial());
  CHECK(c2.case_ii->S == A2);
  CHECK(c2.case_ii->removed.empty());
  CHECK(double_set(A2).size() == 7);

  GroupSubset A3 = make_set(e3, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  StructClassification c3 = struct_classify(A3);
  REQUIRE(c3.case_ii.has_value());
  CHECK(c3.case_ii->F.is_whole());
  CHECK(c3.case_ii->S == A3);

  // 0 plus the four basis vectors of (Z2)^4 doubles to 11 >= 10 elements
  auto e4 = parse_group("Z2xZ2xZ2xZ2");
  GroupSubset spread = make_set(
      e4, {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  CHECK(double_set(spread).size() == 11);
  CHECK_THROWS_AS(struct_classify(spread), Error);
}

TEST_CASE("struct_synthesize examples") {
  auto e4 = parse_group("Z2xZ2xZ2xZ2");
  Subgroup F = Subgroup::from_set(
      make_set(e4, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 1, 1, 0},
                    {1, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}}));
  Subgroup H = Subgroup::from_set(make_set(e4, {{0, 0, 0, 0}, {0, 0, 0, 1}}));
  GroupSubset S = make_set(e4, {{0, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {1, 1, 1, 0}});
  auto [A, predicted] = struct_synthesize(F, H, S, 0, GroupSubset(e4));
  CHECK(predicted == 14);
  CHECK(double_set(A).size() == 14);
  CHECK(A.size() == 8);

  auto e3 = parse_group("Z2xZ2xZ2");
  Subgroup F3 = Subgroup::from_set(
      make_set(e3, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 0}}));
  Subgroup H3 = Subgroup::from_set(make_set(e3, {{0, 0, 0}, {0, 0, 1}}));
  GroupSubset S3 = make_set(e3, {{0, 0, 0}, {0, 1, 0}});  // periodic: pi(S) = S
  auto [A3, predicted3] = struct_synthesize(F3, H3, S3, 0, GroupSubset(e3));
  CHECK(predicted3 == 4);
  CHECK(double_set(A3).size() == 4);

  // removals of exactly |H|/2 are rejected
  GroupSubset removed = make_set(e3, {{0, 0, 0}});
  CHECK_THROWS_AS(struct_synthesize(F3, H3, S3, 0, removed), Error);
  try {
    struct_synthesize(F3, H3, S3, 0, removed);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Contract);
  }
}

TEST_CASE("verify_prior_bounds examples") {
  auto e3 = parse_group("Z2xZ2xZ2");
  GroupSubset A = make_set(e3, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
  VerificationReport r = verify_prior_bounds(A);
  CHECK(r.conclusion_holds);
  CHECK(r.witness["c"] == Json::parse(R"({"num":7,"den":4})"));
  CHECK(r.witness["hnp"]["branch"] == "punctured");
  CHECK(r.witness["hnp"]["F"] == Json::parse("[[0,0,0]]"));
  CHECK(r.witness["hnp"]["h0"] == Json::parse("[0,0,1]"));
  CHECK(r.witness["dhp"]["u"] == Json::parse(R"({"num":19,"den":40})"));

  auto e2 = parse_group("Z2xZ2");
  GroupSubset B = make_set(e2, {{0, 0}, {0, 1}, {1, 0}});
  VerificationReport r2 = verify_prior_bounds(B);
  CHECK(r2.conclusion_holds);
  CHECK(r2.witness["hnp"]["branch"] == "full");

  // a subgroup has c = 1
  GroupSubset sub = make_set(e2, {{0, 0}, {0, 1}});
  VerificationReport r3 = verify_prior_bounds(sub);
  CHECK(r3.conclusion_holds);
  CHECK(r3.witness["c"] == Json::parse(R"({"num":1,"den":1})"));
}

TEST_CASE("synthesize/classify coherence") {
  auto e4 = parse_group("Z2xZ2xZ2xZ2");
  Rng rng(7);
  auto subgroups = all_subgroups(e4);
  int done = 0;
  while (done < 200) {
    const Subgroup& F = subgroups[detail::pick(rng, (int)subgroups.size())];
    if (F.size() < 8) continue;
    const Subgroup& H = subgroups[detail::pick(rng, (int)subgroups.size())];
    if ((F.bits() & H.bits()).count() != 1) continue;
    // random antisymmetric aperiodic S
    auto ids = F.set().ids();
    GroupSubset S(e4);
    int h0 = ids[1 + detail::pick(rng, F.size() - 1)];
    DynBitset seen(e4->order());
    for (int h : ids) {
      if (seen.test(h)) continue;
      int mate = e4->add(h, h0);
      seen.set(h);
      seen.set(mate);
      S.bits_mut().set(rng() & 1 ? mate : h);
    }
    if (!aperiodic(S)) continue;
    auto [A, predicted] = struct_synthesize(F, H, S, detail::pick(rng, e4->order()),
                                            GroupSubset(e4));
    REQUIRE(double_set(A).size() == predicted);
    if (predicted < 2 * A.size() && double_set(A).size() >= 2 * H.size()) {
      StructClassification c = struct_classify(A);
      if (c.case_ii) {
        CHECK(double_set(A).size() ==
              (long long)(c.case_ii->F.size() - 1) * c.case_ii->H.size());
      }
    }
    ++done;
  }
}

TEST_CASE("mu(A,A) >= 2 for |A| >= 2 in exponent-2 groups") {
  for (const char* spec : {"Z2", "Z2xZ2", "Z2xZ2xZ2"}) {
    auto g = parse_group(spec);
    for (const auto& A : all_nonempty_subsets(g))
      if (A.size() >= 2) CHECK(min_rep(A, A) >= 2);
  }
}
