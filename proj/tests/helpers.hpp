#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "sumsets/serialize.hpp"
#include "tests/oracle.hpp"

namespace testutil {

using namespace sumsets;

inline GroupSubset make_set(const GroupPtr& g, std::vector<std::vector<int>> coords) {
  return GroupSubset::from_coords(g, coords);
}

// rank-1 convenience
inline GroupSubset zset(const GroupPtr& g, std::vector<int> values) {
  GroupSubset s(g);
  for (int v : values) s.bits_mut().set(g->id_from_coords({v}));
  return s;
}

inline oracle::Set to_oracle(const GroupSubset& s) {
  oracle::Set out;
  for (const auto& c : s.coords()) out.insert(c);
  return out;
}

inline GroupSubset from_oracle(const GroupPtr& g, const oracle::Set& s) {
  GroupSubset out(g);
  for (const auto& c : s) out.bits_mut().set(g->id_from_coords(c));
  return out;
}

inline std::vector<GroupSubset> all_nonempty_subsets(const GroupPtr& g) {
  std::vector<GroupSubset> out;
  const int n = g->order();
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    GroupSubset s(g);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.bits_mut().set(i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace testutil
