#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "sumsets/subset.hpp"

namespace sumsets {

inline int default_subgroup_cap() {
  if (const char* env = std::getenv("SUMSET_KIT_MAX_ORDER")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 512;
}

namespace detail {

struct SubgroupTable {
  std::vector<DynBitset> sets;               // sorted by (order, element list)
  std::vector<std::vector<int>> generators;  // build chains, parallel to sets
};

// Breadth-first closure enumeration: grow every known subgroup by one new
// element and close.  Extending only by generators larger than the last one
// keeps the canonical increasing generating chain of every subgroup
// reachable while cutting duplicate work; a seen-set removes the rest.
inline std::shared_ptr<const SubgroupTable> enumerate_subgroups(const Group& G) {
  std::map<std::vector<int>, std::vector<int>> seen;  // element ids -> gens
  struct Item {
    DynBitset bits;
    std::vector<int> gens;
    int last;
  };
  std::vector<Item> queue;
  DynBitset triv = trivial_subgroup_bits(G);
  seen.emplace(triv.to_ids(), std::vector<int>{});
  queue.push_back({triv, {}, 0});
  while (!queue.empty()) {
    Item it = std::move(queue.back());
    queue.pop_back();
    for (int g = it.last + 1; g < G.order(); ++g) {
      if (it.bits.test(g)) continue;
      DynBitset ext = extend_subgroup(G, it.bits, g);
      std::vector<int> key = ext.to_ids();
      if (seen.count(key)) continue;
      std::vector<int> gens = it.gens;
      gens.push_back(g);
      seen.emplace(std::move(key), gens);
      queue.push_back({std::move(ext), std::move(gens), g});
    }
  }
  auto table = std::make_shared<SubgroupTable>();
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rows(seen.begin(), seen.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (auto& [ids, gens] : rows) {
    DynBitset b(G.order());
    for (int id : ids) b.set(id);
    table->sets.push_back(std::move(b));
    table->generators.push_back(std::move(gens));
  }
  return table;
}

inline std::shared_ptr<const SubgroupTable> subgroup_table(const GroupPtr& g) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!g->subgroup_cache_) g->subgroup_cache_ = enumerate_subgroups(*g);
  return std::static_pointer_cast<const SubgroupTable>(g->subgroup_cache_);
}

}  // namespace detail

// Every subgroup of G exactly once, sorted by (order, canonical element
// list); includes {0} and G itself.
inline std::vector<Subgroup> all_subgroups(const GroupPtr& g, int cap = -1) {
  if (cap < 0) cap = default_subgroup_cap();
  if (g->order() > cap)
    throw_resource("group order " + std::to_string(g->order()) +
                   " exceeds the subgroup-enumeration cap " + std::to_string(cap) +
                   "; raise the cap (SUMSET_KIT_MAX_ORDER or --max-order)");
  auto table = detail::subgroup_table(g);
  std::vector<Subgroup> out;
  out.reserve(table->sets.size());
  for (size_t i = 0; i < table->sets.size(); ++i) {
    Subgroup h = Subgroup::unchecked(GroupSubset(g, table->sets[i]));
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace sumsets
