#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "sumsets/group.hpp"

namespace sumsets {

// A finite subset of one ambient group.  Element ids are kept in a bitset,
// so iteration order is the canonical (lexicographic) element order.
class GroupSubset {
 public:
  GroupSubset() = default;
  explicit GroupSubset(GroupPtr g) : group_(std::move(g)), bits_(group_->order()) {}
  GroupSubset(GroupPtr g, const std::vector<int>& ids)
      : group_(std::move(g)), bits_(group_->order()) {
    for (int id : ids) {
      require(id >= 0 && id < group_->order(), ErrorKind::Domain,
              "element id out of range");
      bits_.set(id);
    }
  }
  GroupSubset(GroupPtr g, DynBitset bits) : group_(std::move(g)), bits_(std::move(bits)) {}

  static GroupSubset from_coords(const GroupPtr& g,
                                 const std::vector<std::vector<int>>& elems) {
    GroupSubset s(g);
    for (const auto& c : elems) s.bits_.set(g->id_from_coords(c));
    return s;
  }
  static GroupSubset single(const GroupPtr& g, int id) {
    GroupSubset s(g);
    s.bits_.set(id);
    return s;
  }
  static GroupSubset full(const GroupPtr& g) {
    GroupSubset s(g);
    for (int i = 0; i < g->order(); ++i) s.bits_.set(i);
    return s;
  }

  const Group& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const DynBitset& bits() const { return bits_; }
  DynBitset& bits_mut() { return bits_; }

  int size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(int id) const { return bits_.test(id); }
  int min_element() const { return bits_.first(); }
  std::vector<int> ids() const { return bits_.to_ids(); }

  std::vector<std::vector<int>> coords() const {
    std::vector<std::vector<int>> out;
    out.reserve(size());
    bits_.for_each([&](int id) { out.push_back(group_->coords(id)); });
    return out;
  }

  GroupSubset with(int id) const {
    GroupSubset s = *this;
    s.bits_.set(id);
    return s;
  }
  GroupSubset without(int id) const {
    GroupSubset s = *this;
    s.bits_.reset(id);
    return s;
  }

  bool operator==(const GroupSubset& o) const {
    return group_->same_as(*o.group_) && bits_ == o.bits_;
  }
  bool operator!=(const GroupSubset& o) const { return !(*this == o); }

  bool is_subset_of(const GroupSubset& o) const { return bits_.is_subset_of(o.bits_); }

  friend GroupSubset set_union(const GroupSubset& a, const GroupSubset& b) {
    return GroupSubset(a.group_, a.bits_ | b.bits_);
  }
  friend GroupSubset set_intersect(const GroupSubset& a, const GroupSubset& b) {
    return GroupSubset(a.group_, a.bits_ & b.bits_);
  }
  friend GroupSubset set_minus(const GroupSubset& a, const GroupSubset& b) {
    return GroupSubset(a.group_, minus(a.bits_, b.bits_));
  }

 private:
  GroupPtr group_;
  DynBitset bits_;
};

inline void require_same_group(const GroupSubset& a, const GroupSubset& b) {
  require(a.group().same_as(b.group()), ErrorKind::Domain,
          "operands live in different ambient groups");
}

inline int compare_canonical(const GroupSubset& a, const GroupSubset& b) {
  return DynBitset::compare_lists(a.bits(), b.bits());
}

namespace detail {

// S + <g> for a subgroup bitset S; in an abelian group this is the subgroup
// generated by S and g.
inline DynBitset extend_subgroup(const Group& G, const DynBitset& S, int g) {
  DynBitset T = S;
  int cur = g;
  while (!T.test(cur)) {
    S.for_each([&](int s) { T.set(G.add(s, cur)); });
    cur = G.add(cur, g);
  }
  return T;
}

inline DynBitset trivial_subgroup_bits(const Group& G) {
  DynBitset b(G.order());
  b.set(0);
  return b;
}

inline DynBitset generated_subgroup_bits(const Group& G, const std::vector<int>& gens) {
  DynBitset b = trivial_subgroup_bits(G);
  for (int g : gens) b = extend_subgroup(G, b, g);
  return b;
}

inline bool is_subgroup_bits(const Group& G, const DynBitset& b) {
  if (!b.test(0)) return false;
  bool ok = true;
  b.for_each([&](int x) {
    if (!ok) return;
    b.for_each([&](int y) {
      if (ok && !b.test(G.add(x, y))) ok = false;
    });
  });
  return ok;
}

// Greedy generating set: scan elements in canonical order, keep those not
// yet spanned.
inline std::vector<int> greedy_generators(const Group& G, const DynBitset& sub) {
  std::vector<int> gens;
  DynBitset span = trivial_subgroup_bits(G);
  sub.for_each([&](int x) {
    if (!span.test(x)) {
      gens.push_back(x);
      span = extend_subgroup(G, span, x);
    }
  });
  return gens;
}

}  // namespace detail

// A validated subgroup of an ambient group.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup from_set(const GroupSubset& s) {
    require(!s.empty(), ErrorKind::Domain, "subgroup cannot be empty");
    require(detail::is_subgroup_bits(s.group(), s.bits()), ErrorKind::Domain,
            "set is not closed under the group operation");
    Subgroup h;
    h.set_ = s;
    h.generators_ = detail::greedy_generators(s.group(), s.bits());
    return h;
  }

  static Subgroup generated_by(const GroupPtr& g, const std::vector<int>& gens) {
    Subgroup h;
    h.set_ = GroupSubset(g, detail::generated_subgroup_bits(*g, gens));
    h.generators_ = detail::greedy_generators(*g, h.set_.bits());
    return h;
  }

  static Subgroup trivial(const GroupPtr& g) {
    return generated_by(g, {});
  }
  static Subgroup whole(const GroupPtr& g) {
    Subgroup h;
    h.set_ = GroupSubset::full(g);
    h.generators_ = detail::greedy_generators(*g, h.set_.bits());
    return h;
  }

  // For internal construction where closure is known to hold.
  static Subgroup unchecked(GroupSubset s) {
    Subgroup h;
    h.generators_ = detail::greedy_generators(s.group(), s.bits());
    h.set_ = std::move(s);
    return h;
  }

  const GroupSubset& set() const { return set_; }
  const DynBitset& bits() const { return set_.bits(); }
  const Group& group() const { return set_.group(); }
  const GroupPtr& group_ptr() const { return set_.group_ptr(); }
  const std::vector<int>& generators() const { return generators_; }

  int size() const { return set_.size(); }
  int index() const { return group().order() / size(); }
  bool is_trivial() const { return size() == 1; }
  bool is_whole() const { return size() == group().order(); }
  bool contains(int id) const { return set_.contains(id); }

  // This subgroup as an ambient group of its own; elementary structure is
  // invariant under this restriction.
  GroupPtr as_group() const {
    return Group::make_subview(group_ptr(), bits());
  }

  bool operator==(const Subgroup& o) const { return set_ == o.set_; }
  bool operator!=(const Subgroup& o) const { return !(*this == o); }

 private:
  GroupSubset set_;
  std::vector<int> generators_;
};

// Map a subset of a subview group back into the parent group.
inline GroupSubset embed_in_base(const GroupSubset& s) {
  const Group& V = s.group();
  const GroupPtr& parent = V.base();
  require(parent != nullptr, ErrorKind::Domain, "set does not live in a subview");
  GroupSubset out(parent);
  s.bits().for_each([&](int id) { out.bits_mut().set(V.rep_in_base(id)); });
  return out;
}

// Restrict a parent-group subset to a subview group; every element must lie
// in the subgroup the view was built from.
inline GroupSubset restrict_to_view(const GroupSubset& s, const GroupPtr& view) {
  GroupSubset out(view);
  s.bits().for_each([&](int id) {
    int v = view->project_from_base(id);
    require(v >= 0, ErrorKind::Domain, "element lies outside the subgroup view");
    out.bits_mut().set(v);
  });
  return out;
}

}  // namespace sumsets
