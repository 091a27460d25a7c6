#include "tests/helpers.hpp"

using namespace sumsets;
using testutil::all_nonempty_subsets;
using testutil::make_set;
using testutil::zset;

TEST_CASE("verify_theorem frozen examples") {
  auto z6 = parse_group("Z6");

  VerificationReport kn = verify_theorem("kneser", zset(z6, {0, 1, 5}), zset(z6, {0, 1, 5}));
  CHECK(kn.hypotheses_hold);
  CHECK(kn.conclusion_holds);

  VerificationReport co =
      verify_theorem("corollary_half", zset(z6, {0, 3}), zset(z6, {0, 1, 3, 4}));
  CHECK(co.hypotheses_hold);
  CHECK(co.conclusion_holds);

  VerificationReport eq =
      verify_theorem("equality_claim", zset(z6, {0, 1, 4}), zset(z6, {0, 1, 3, 4}));
  CHECK(eq.hypotheses_hold);
  CHECK(eq.conclusion_holds);

  VerificationReport ks = verify_theorem("kemperman_scherk", zset(z6, {0, 1}), zset(z6, {2}));
  CHECK(ks.hypotheses_hold);
  CHECK(ks.conclusion_holds);

  CHECK_THROWS_AS(verify_theorem("vosper", zset(z6, {0}), zset(z6, {0})), Error);
  try {
    verify_theorem("vosper", zset(z6, {0}), zset(z6, {0}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Usage);
  }
}

TEST_CASE("verify_theorem reports failed hypotheses without claiming conclusions") {
  auto z5 = parse_group("Z5");
  // |A+B| = 4 > |A|+|B|-1 = 3: Kneser's hypothesis fails
  VerificationReport r = verify_theorem("kneser", zset(z5, {0, 1}), zset(z5, {0, 2}));
  CHECK_FALSE(r.hypotheses_hold);
  CHECK_FALSE(r.conclusion_holds);
  // corollary_half with |A+B| >= |A|/2 + |B|
  VerificationReport r2 = verify_theorem("corollary_half", zset(z5, {0, 1}), zset(z5, {0, 2}));
  CHECK_FALSE(r2.hypotheses_hold);
}

TEST_CASE("is_thick_component examples") {
  auto z7 = parse_group("Z7");
  CHECK(is_thick_component(zset(z7, {0, 1, 3})));
  auto z8 = parse_group("Z8");
  CHECK_FALSE(is_thick_component(zset(z8, {0, 2})));
  auto z3 = parse_group("Z3");
  CHECK(is_thick_component(zset(z3, {0})));

  auto z24 = parse_group("Z24");
  CHECK_THROWS_AS(is_thick_component(zset(z24, {0})), Error);
  try {
    is_thick_component(zset(z24, {0}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Resource);
  }
}

TEST_CASE("thick_reduction examples") {
  auto z6 = parse_group("Z6");
  auto [h1, b1] = thick_reduction(zset(z6, {0, 3}));
  CHECK(h1.set().ids() == std::vector<int>{0, 3});
  CHECK(b1 == ThickBranch::Ap);

  auto z8 = parse_group("Z8");
  auto [h2, b2] = thick_reduction(zset(z8, {0, 1, 2}));
  CHECK(h2.is_trivial());
  CHECK(b2 == ThickBranch::Ap);

  auto z7 = parse_group("Z7");
  auto [h3, b3] = thick_reduction(zset(z7, {0, 1, 3}));
  CHECK(h3.is_trivial());
  CHECK(b3 == ThickBranch::Thick);

  CHECK_THROWS_AS(thick_reduction(zset(z6, {0, 1, 2, 3})), Error);
}

TEST_CASE("hampla_structure examples") {
  auto z8 = parse_group("Z8");
  VerificationReport r1 = hampla_structure(zset(z8, {0, 1, 4, 5}), zset(z8, {0, 4}));
  CHECK(r1.conclusion_holds);
  CHECK(r1.witness["branch"] == "i");
  CHECK(r1.witness["H"] == Json::parse("[[0],[4]]"));

  VerificationReport r2 = hampla_structure(zset(z8, {0, 1}), zset(z8, {0, 1, 2}));
  CHECK(r2.conclusion_holds);
  CHECK(r2.witness["branch"] == "ii");
  CHECK(r2.witness["n"] == 1);
  CHECK(r2.witness["A0"] == Json::parse("[[0],[1]]"));

  auto z6 = parse_group("Z6");
  CHECK_THROWS_AS(hampla_structure(zset(z6, {0, 1, 4}), zset(z6, {0, 1, 3, 4})), Error);
}

TEST_CASE("recover_partition frozen examples") {
  auto z5 = parse_group("Z5");
  PartitionWitness w = recover_partition(zset(z5, {0, 1, 4}), zset(z5, {0, 2, 3}),
                                         Subgroup::whole(z5));
  CHECK(w.kind == PartitionKind::Coset);
  CHECK(w.g1 == 0);
  CHECK(w.g2 == 0);
  CHECK(w.H1.ids() == std::vector<int>{1, 4});
  CHECK(w.H2.ids() == std::vector<int>{2, 3});

  auto e3 = parse_group("Z2xZ2xZ2");
  GroupSubset A = make_set(e3, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
  PartitionWitness w2 = recover_partition(A, A, Subgroup::whole(e3));
  CHECK(w2.kind == PartitionKind::PuncturedCoset);
  CHECK(w2.g1 == 0);
  CHECK(w2.g2 == e3->id_from_coords({0, 0, 1}));
  CHECK(w2.H1 == A);
  CHECK(w2.H2 == shift(A, e3->id_from_coords({0, 0, 1})));
  CHECK(w2.rebuild_A() == A);
  CHECK(w2.rebuild_B() == A);

  auto z6 = parse_group("Z6");
  CHECK_THROWS_AS(
      recover_partition(zset(z6, {0, 1}), zset(z6, {0, 1}), Subgroup::whole(z6)), Error);
}

TEST_CASE("refine_partition frozen examples") {
  auto z5 = parse_group("Z5");
  GroupSubset A5 = zset(z5, {0, 1, 2});
  PartitionWitness w{PartitionKind::Coset, 0, 0, Subgroup::whole(z5),
                     zset(z5, {1, 2}), zset(z5, {3, 4})};
  CHECK(w.rebuild_A() == A5);
  CHECK(w.rebuild_B() == A5);
  RefinementResult r = refine_partition(w, 4);
  CHECK(r.f == 4);
  CHECK(r.F.is_whole());
  CHECK(r.A0 == A5);
  CHECK(r.B0 == A5);
  CHECK(r.apA0.d == 4);
  CHECK(sumset(r.A0, r.B0).size() == 5);
  CHECK(r.all_hold());

  auto z6 = parse_group("Z6");
  PartitionWitness wp{PartitionKind::PuncturedCoset, 0, 0, Subgroup::whole(z6),
                      zset(z6, {0, 1, 2}), zset(z6, {3, 4, 5})};
  CHECK(wp.rebuild_A() == zset(z6, {0, 1, 2}));
  CHECK(wp.rebuild_B() == zset(z6, {1, 2, 3}));
  RefinementResult rp = refine_partition(wp, 1);
  CHECK(rp.f == 1);
  CHECK(rp.F.is_whole());
  CHECK(rp.apA0.d == 1);
  CHECK(sumset(rp.A0, rp.B0).size() == 5);
  CHECK(rp.all_hold());

  // nu_c = 2 is rejected
  CHECK_THROWS_AS(refine_partition(wp, 2), Error);
  // c = g1+g2 is rejected in the coset case
  CHECK_THROWS_AS(refine_partition(w, 0), Error);
}

TEST_CASE("kneser and kemperman_scherk reports never fail under their hypotheses") {
  for (const char* spec : {"Z6", "Z2xZ4"}) {
    auto g = parse_group(spec);
    auto subsets = all_nonempty_subsets(g);
    for (const auto& A : subsets)
      for (const auto& B : subsets) {
        VerificationReport ks = verify_theorem("kemperman_scherk", A, B);
        REQUIRE(ks.conclusion_holds);
        VerificationReport kn = verify_theorem("kneser", A, B);
        if (kn.hypotheses_hold) REQUIRE(kn.conclusion_holds);
        VerificationReport co = verify_theorem("corollary_half", A, B);
        if (co.hypotheses_hold) REQUIRE(co.conclusion_holds);
        VerificationReport eq = verify_theorem("equality_claim", A, B);
        if (eq.hypotheses_hold) REQUIRE(eq.conclusion_holds);
      }
  }
}

TEST_CASE("thick_reduction succeeds and re-validates for |A| <= |G|/2, order <= 8") {
  for (const char* spec : {"Z5", "Z6", "Z7", "Z8", "Z2xZ2", "Z2xZ4"}) {
    auto g = parse_group(spec);
    for (const auto& A : all_nonempty_subsets(g)) {
      if (2 * A.size() > g->order()) continue;
      auto [H, branch] = thick_reduction(A);
      CHECK(saturation_defect(A, H) <= H.size() - 1);
      CHECK(sumset(A, H.set()).size() != g->order());
      QuotientMap q(g, H);
      if (branch == ThickBranch::Ap)
        CHECK(is_arithmetic_progression(q.image(A)));
      else
        CHECK(is_thick_component(q.image(A)));
    }
  }
}

TEST_CASE("appendix round trip on order <= 6 groups") {
  for (const char* spec : {"Z4", "Z5", "Z6", "Z2xZ2"}) {
    auto g = parse_group(spec);
    auto subsets = all_nonempty_subsets(g);
    auto subgroups = all_subgroups(g);
    int applications = 0;
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
          ++applications;
          PartitionWitness w = recover_partition(A, B, H);
          CHECK(w.rebuild_A() == A);
          CHECK(w.rebuild_B() == B);
          AB.bits().for_each([&](int c) {
            if (rep_count(c, A, B) != 1) return;
            if (w.kind == PartitionKind::Coset && c == g->add(w.g1, w.g2)) return;
            RefinementResult r = refine_partition(w, c);
            CHECK(r.quotient_additive);
            CHECK(r.quotient_coset);
            CHECK(r.residual_additive);
            CHECK(r.residual_shape);
            CHECK(r.unique_representation);
            CHECK(ap_set(g, r.apA0) == r.A0);
            CHECK(ap_set(g, r.apB0) == r.B0);
          });
        }
      }
    CHECK(applications > 0);
  }
}
