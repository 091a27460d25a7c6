#pragma once

#include <string>

#include "sumsets/doubling.hpp"

namespace sumsets {

// JSON forms are the external contract: groups as {"moduli":[...]},
// elements as integer arrays, sets as arrays of element arrays in
// canonical order.  Serialization then parsing then serialization is
// byte-identical.

inline Json json_group(const Group& g) { return Json{{"moduli", g.moduli()}}; }

inline GroupPtr group_from_json(const Json& j) {
  require(j.is_object() && j.contains("moduli") && j["moduli"].is_array(),
          ErrorKind::Parse, "group JSON must be {\"moduli\":[...]}");
  std::vector<int> moduli;
  for (const auto& m : j["moduli"]) {
    require(m.is_number_integer(), ErrorKind::Parse, "moduli must be integers");
    moduli.push_back(m.get<int>());
  }
  return Group::make(std::move(moduli));
}

inline int element_from_json(const Group& g, const Json& j) {
  require(j.is_array(), ErrorKind::Parse, "element JSON must be an array of integers");
  std::vector<int> coords;
  for (const auto& v : j) {
    require(v.is_number_integer(), ErrorKind::Parse, "element coordinates must be integers");
    coords.push_back(v.get<int>());
  }
  return g.id_from_coords(coords);
}

inline GroupSubset set_from_json(const GroupPtr& g, const Json& j) {
  require(j.is_array(), ErrorKind::Parse, "set JSON must be an array of elements");
  GroupSubset out(g);
  for (const auto& e : j) out.bits_mut().set(element_from_json(*g, e));
  return out;
}

inline Json json_rational(const Rational& r) {
  return Json{{"num", r.num}, {"den", r.den}};
}

// --- witnesses --------------------------------------------------------------

inline Json json_ap_witness(const Group& g, const ApWitness& w) {
  return Json{{"g", g.coords(w.g)}, {"d", g.coords(w.d)}, {"k", w.k}};
}

inline ApWitness ap_witness_from_json(const Group& g, const Json& j) {
  ApWitness w;
  w.g = element_from_json(g, j.at("g"));
  w.d = element_from_json(g, j.at("d"));
  w.k = j.at("k").get<int>();
  return w;
}

inline Json json_witness(const Group& g, const ElementaryWitness& w) {
  if (auto* w1 = std::get_if<WitnessI>(&w))
    return Json{{"type", "I"}, {"singleton_side", std::string(1, w1->side)}};
  if (auto* w2 = std::get_if<WitnessII>(&w))
    return Json{{"type", "II"},
                {"apA", json_ap_witness(g, w2->apA)},
                {"apB", json_ap_witness(g, w2->apB)}};
  if (auto* w3 = std::get_if<WitnessIII>(&w))
    return Json{{"type", "III"},     {"g1", g.coords(w3->g1)},
                {"g2", g.coords(w3->g2)}, {"H", json_subgroup(w3->H)},
                {"H1", json_set(w3->H1)}, {"H2", json_set(w3->H2)}};
  const auto& w4 = std::get<WitnessIV>(w);
  return Json{{"type", "IV"},     {"g1", g.coords(w4.g1)},
              {"g2", g.coords(w4.g2)}, {"H", json_subgroup(w4.H)},
              {"H1", json_set(w4.H1)}, {"H2", json_set(w4.H2)}};
}

inline ElementaryWitness witness_from_json(const GroupPtr& g, const Json& j) {
  std::string type = j.at("type").get<std::string>();
  if (type == "I") {
    std::string side = j.at("singleton_side").get<std::string>();
    require(side == "A" || side == "B", ErrorKind::Parse,
            "singleton_side must be \"A\" or \"B\"");
    return WitnessI{side[0]};
  }
  if (type == "II")
    return WitnessII{ap_witness_from_json(*g, j.at("apA")),
                     ap_witness_from_json(*g, j.at("apB"))};
  if (type == "III" || type == "IV") {
    int g1 = element_from_json(*g, j.at("g1"));
    int g2 = element_from_json(*g, j.at("g2"));
    Subgroup H = Subgroup::from_set(set_from_json(g, j.at("H")));
    GroupSubset H1 = set_from_json(g, j.at("H1"));
    GroupSubset H2 = set_from_json(g, j.at("H2"));
    if (type == "III") return WitnessIII{g1, g2, H, H1, H2};
    return WitnessIV{g1, g2, H, H1, H2};
  }
  throw_parse("unknown witness type '" + type + "'");
}

// --- certificates -----------------------------------------------------------

inline Json json_certificate(const Group&, const KempermanCertificate& c) {
  return Json{{"kind", "kemperman"},
              {"H", json_subgroup(c.H)},
              {"A0", json_set(c.A0)},
              {"B0", json_set(c.B0)}};
}

inline Json json_certificate(const Group& g, const DualCertificate& c) {
  if (c.is_elementary())
    return Json{{"kind", "dual"},
                {"variant", "elementary"},
                {"witness", json_witness(g, *c.elementary)}};
  return Json{{"kind", "dual"},
              {"variant", "split"},
              {"H", json_subgroup(c.split->H)},
              {"A0", json_set(c.split->A0)},
              {"B0", json_set(c.split->B0)}};
}

inline Json json_certificate(const Group&, const MeCertificate& c) {
  return Json{{"kind", "me"}, {"H", json_subgroup(c.H)}};
}

inline KempermanCertificate kemperman_certificate_from_json(const GroupPtr& g,
                                                            const Json& j) {
  return {Subgroup::from_set(set_from_json(g, j.at("H"))),
          set_from_json(g, j.at("A0")), set_from_json(g, j.at("B0"))};
}

inline DualCertificate dual_certificate_from_json(const GroupPtr& g, const Json& j) {
  DualCertificate c;
  std::string variant = j.at("variant").get<std::string>();
  if (variant == "elementary") {
    c.elementary = witness_from_json(g, j.at("witness"));
  } else if (variant == "split") {
    c.split = DualSplit{Subgroup::from_set(set_from_json(g, j.at("H"))),
                        set_from_json(g, j.at("A0")), set_from_json(g, j.at("B0"))};
  } else {
    throw_parse("unknown dual certificate variant '" + variant + "'");
  }
  return c;
}

inline MeCertificate me_certificate_from_json(const GroupPtr& g, const Json& j) {
  return {Subgroup::from_set(set_from_json(g, j.at("H")))};
}

inline Json json_check_result(const CertCheckResult& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses)
    clauses.push_back(Json{{"clause", c.clause}, {"holds", c.holds}, {"detail", c.detail}});
  return Json{{"valid", r.ok}, {"clauses", clauses}};
}

inline Json json_report(const VerificationReport& r) {
  return Json{{"theorem", r.theorem_id},
              {"hypotheses_hold", r.hypotheses_hold},
              {"conclusion_holds", r.conclusion_holds},
              {"witness", r.witness}};
}

// --- trees and doubling payloads ---------------------------------------------

inline Json json_tree(const DecompositionTree& t) {
  Json node;
  node["mode"] = t.mode == DecomposeMode::Kemperman ? "kemperman" : "dual";
  node["A"] = json_set(t.A);
  node["B"] = json_set(t.B);
  if (t.is_leaf()) {
    node["leaf"] = json_witness(t.A.group(), *t.leaf);
    return node;
  }
  node["H"] = json_subgroup(*t.H);
  node["A0"] = json_set(*t.A0);
  node["B0"] = json_set(*t.B0);
  node["child"] = json_tree(*t.child);
  return node;
}

inline Json json_partition_witness(const PartitionWitness& w) {
  const Group& g = w.H.group();
  return Json{{"kind", w.kind == PartitionKind::Coset ? "coset" : "punctured_coset"},
              {"g1", g.coords(w.g1)},
              {"g2", g.coords(w.g2)},
              {"H", json_subgroup(w.H)},
              {"H1", json_set(w.H1)},
              {"H2", json_set(w.H2)}};
}

inline Json json_refinement(const RefinementResult& r) {
  const Group& g = r.F.group();
  return Json{{"f", g.coords(r.f)},
              {"F", json_subgroup(r.F)},
              {"A0", json_set(r.A0)},
              {"B0", json_set(r.B0)},
              {"apA0", json_ap_witness(g, r.apA0)},
              {"apB0", json_ap_witness(g, r.apB0)},
              {"quotient_additive", r.quotient_additive},
              {"quotient_coset", r.quotient_coset},
              {"residual_additive", r.residual_additive},
              {"residual_shape", r.residual_shape},
              {"unique_representation", r.unique_representation}};
}

inline Json json_struct_classification(const StructClassification& c) {
  if (c.case_i)
    return Json{{"case", "I"}, {"H", json_subgroup(c.case_i->H)}};
  const StructCaseII& s = *c.case_ii;
  const Group& g = s.F.group();
  return Json{{"case", "II"},
              {"F", json_subgroup(s.F)},
              {"H", json_subgroup(s.H)},
              {"S", json_set(s.S)},
              {"shift", g.coords(s.shift_elem)},
              {"removed", json_set(s.removed)}};
}

inline Json json_selfpair(const SelfPairWitness& w) {
  const Group& g = w.H.group();
  return Json{{"g", g.coords(w.g)},
              {"H", json_subgroup(w.H)},
              {"h0", g.coords(w.h0)},
              {"S", json_set(w.S)}};
}

}  // namespace sumsets
