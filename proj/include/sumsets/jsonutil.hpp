#pragma once

#include <json.hpp>

#include "sumsets/subset.hpp"

namespace sumsets {

// All emitted JSON uses insertion order, so serialized artifacts are
// byte-stable across runs.
using Json = nlohmann::ordered_json;

inline Json json_element(const Group& g, int id) { return Json(g.coords(id)); }

inline Json json_set(const GroupSubset& s) {
  Json arr = Json::array();
  s.bits().for_each([&](int id) { arr.push_back(s.group().coords(id)); });
  return arr;
}

inline Json json_subgroup(const Subgroup& h) { return json_set(h.set()); }

}  // namespace sumsets
