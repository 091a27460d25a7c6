#include "tests/helpers.hpp"

using namespace sumsets;
using testutil::make_set;
using testutil::zset;

TEST_CASE("group and set JSON forms") {
  auto g = parse_group("Z4xZ2");
  CHECK(json_group(*g).dump() == R"({"moduli":[4,2]})");
  CHECK(group_from_json(Json::parse(R"({"moduli":[4,2]})"))->same_as(*g));
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"mods":[4]})")), Error);

  GroupSubset s = make_set(g, {{1, 0}, {0, 1}, {3, 1}});
  CHECK(json_set(s).dump() == "[[0,1],[1,0],[3,1]]");  // canonical order
  CHECK(set_from_json(g, json_set(s)) == s);
  CHECK_THROWS_AS(set_from_json(g, Json::parse("[[4,0]]")), Error);
}

TEST_CASE("certificate JSON round-trips bit-exactly") {
  auto z6 = parse_group("Z6");
  GroupSubset A = zset(z6, {0, 1, 4}), B = zset(z6, {0, 1, 3, 4});

  KempermanCertificate kc = kemperman_decompose(A, B);
  Json j = json_certificate(*z6, kc);
  CHECK(j.dump() == R"({"kind":"kemperman","H":[[0],[3]],"A0":[[0]],"B0":[[0],[3]]})");
  KempermanCertificate kc2 = kemperman_certificate_from_json(z6, j);
  CHECK(json_certificate(*z6, kc2).dump() == j.dump());
  CHECK(check_certificate(A, B, kc2).ok);

  DualCertificate dc = dual_decompose(A, B);
  Json jd = json_certificate(*z6, dc);
  DualCertificate dc2 = dual_certificate_from_json(z6, jd);
  CHECK(json_certificate(*z6, dc2).dump() == jd.dump());

  auto z5 = parse_group("Z5");
  DualCertificate elem = dual_decompose(zset(z5, {0, 1, 4}), zset(z5, {0, 2, 3}));
  Json je = json_certificate(*z5, elem);
  CHECK(je["variant"] == "elementary");
  DualCertificate elem2 = dual_certificate_from_json(z5, je);
  CHECK(json_certificate(*z5, elem2).dump() == je.dump());

  MeCertificate mc = me_decompose(A, B);
  Json jm = json_certificate(*z6, mc);
  CHECK(json_certificate(*z6, me_certificate_from_json(z6, jm)).dump() == jm.dump());
}

TEST_CASE("witness JSON carries the documented shape") {
  auto z5 = parse_group("Z5");
  GroupSubset A = zset(z5, {0, 1, 4}), B = zset(z5, {0, 2, 3});
  auto ws = classify_elementary(A, B);
  REQUIRE_FALSE(ws.empty());
  Json j = json_witness(*z5, ws.front());
  CHECK(j["type"] == "III");
  CHECK(j.contains("g1"));
  CHECK(j.contains("H1"));
  ElementaryWitness back = witness_from_json(z5, j);
  CHECK(check_elementary_witness(A, B, back));
  CHECK(json_witness(*z5, back).dump() == j.dump());

  // all four types survive the round trip
  auto z7 = parse_group("Z7");
  for (const auto& w : classify_elementary(zset(z7, {1}), zset(z7, {2, 3}))) {
    Json jw = json_witness(*z7, w);
    CHECK(json_witness(*z7, witness_from_json(z7, jw)).dump() == jw.dump());
  }
  auto e3 = parse_group("Z2xZ2xZ2");
  GroupSubset S = make_set(e3, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
  for (const auto& w : classify_elementary(S, S)) {
    Json jw = json_witness(*e3, w);
    CHECK(json_witness(*e3, witness_from_json(e3, jw)).dump() == jw.dump());
  }
}

TEST_CASE("malformed witness JSON is rejected") {
  auto z5 = parse_group("Z5");
  CHECK_THROWS_AS(witness_from_json(z5, Json::parse(R"({"type":"V"})")), Error);
  CHECK_THROWS_AS(
      witness_from_json(z5, Json::parse(R"({"type":"I","singleton_side":"C"})")), Error);
}

TEST_CASE("rationals serialize as num/den") {
  CHECK(json_rational(Rational(19, 40)).dump() == R"({"num":19,"den":40})");
  CHECK(json_rational(Rational(14, 8)).dump() == R"({"num":7,"den":4})");
  CHECK(json_rational(Rational(-2, -4)).dump() == R"({"num":1,"den":2})");
}

TEST_CASE("tree JSON includes nested certificates down to the leaf") {
  auto z6 = parse_group("Z6");
  auto tree = decomposition_tree(zset(z6, {0, 1, 4}), zset(z6, {0, 1, 3, 4}),
                                 DecomposeMode::Kemperman);
  Json j = json_tree(*tree);
  CHECK(j["mode"] == "kemperman");
  CHECK(j["H"] == Json::parse("[[0],[3]]"));
  REQUIRE(j.contains("child"));
  CHECK(j["child"]["leaf"]["type"] == "II");
}

TEST_CASE("quotient elements serialize through minimal representatives") {
  auto z6 = parse_group("Z6");
  QuotientMap q(z6, Subgroup::generated_by(z6, {3}));
  GroupSubset bar(q.group(), std::vector<int>{0, 1});
  CHECK(json_set(bar).dump() == "[[0],[1]]");  // reps 0 and 1 of the cosets
}
