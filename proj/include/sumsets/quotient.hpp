#pragma once

#include <utility>

#include "sumsets/subgroups.hpp"
#include "sumsets/sumset.hpp"

namespace sumsets {

// Canonical homomorphism G -> G/H together with its inverse image.  The
// quotient is a first-class Group (coset ids ordered by minimal
// representative), so every operation in the library applies to quotient
// pairs unchanged.
class QuotientMap {
 public:
  QuotientMap(GroupPtr source, Subgroup kernel)
      : source_(std::move(source)), kernel_(std::move(kernel)) {
    require(kernel_.group().same_as(*source_), ErrorKind::Domain,
            "kernel lives in a different group");
    quot_ = Group::make_quotient(source_, kernel_.bits());
  }

  const GroupPtr& source() const { return source_; }
  const Subgroup& kernel() const { return kernel_; }
  const GroupPtr& group() const { return quot_; }  // the quotient group
  int index() const { return quot_->order(); }

  int apply(int source_id) const { return quot_->project_from_base(source_id); }
  int rep(int coset_id) const { return quot_->rep_in_base(coset_id); }

  GroupSubset image(const GroupSubset& s) const {
    require(s.group().same_as(*source_), ErrorKind::Domain,
            "set lives in a different group");
    GroupSubset out(quot_);
    s.bits().for_each([&](int id) { out.bits_mut().set(apply(id)); });
    return out;
  }

  GroupSubset preimage(const GroupSubset& bar) const {
    require(bar.group().same_as(*quot_), ErrorKind::Domain,
            "set does not live in this quotient");
    GroupSubset out(source_);
    for (int x = 0; x < source_->order(); ++x)
      if (bar.contains(apply(x))) out.bits_mut().set(x);
    return out;
  }

  GroupSubset coset(int coset_id) const {
    GroupSubset out(source_);
    for (int x = 0; x < source_->order(); ++x)
      if (apply(x) == coset_id) out.bits_mut().set(x);
    return out;
  }

 private:
  GroupPtr source_;
  Subgroup kernel_;
  GroupPtr quot_;
};

inline QuotientMap quotient(const GroupPtr& g, const Subgroup& h) {
  return QuotientMap(g, h);
}

// Validating wrapper for callers holding a plain set.
inline QuotientMap quotient(const GroupPtr& g, const GroupSubset& h) {
  return QuotientMap(g, Subgroup::from_set(h));
}

// The lifting construction behind Kneser's theorem: given a quotient pair
// with |Abar+Bbar| = |Abar|+|Bbar|-1, remove fewer than |H| elements in
// total from the full preimages.  The result always satisfies (1.1).
inline std::pair<GroupSubset, GroupSubset> lift_pair(const QuotientMap& q,
                                                     const GroupSubset& Abar,
                                                     const GroupSubset& Bbar,
                                                     const GroupSubset& delA,
                                                     const GroupSubset& delB) {
  require(!Abar.empty() && !Bbar.empty(), ErrorKind::Domain,
          "lift_pair requires non-empty quotient sets");
  GroupSubset sumbar = sumset(Abar, Bbar);
  require(sumbar.size() == Abar.size() + Bbar.size() - 1, ErrorKind::Contract,
          "quotient pair must satisfy |Abar+Bbar| = |Abar|+|Bbar|-1");
  GroupSubset liftA = q.preimage(Abar);
  GroupSubset liftB = q.preimage(Bbar);
  require(delA.is_subset_of(liftA), ErrorKind::Contract,
          "delA must be a subset of the preimage of Abar");
  require(delB.is_subset_of(liftB), ErrorKind::Contract,
          "delB must be a subset of the preimage of Bbar");
  int budget = delA.size() + delB.size();
  require(budget < q.kernel().size(), ErrorKind::Contract,
          "deletion budget |delA|+|delB| = " + std::to_string(budget) +
              " must be smaller than |H| = " + std::to_string(q.kernel().size()));
  return {set_minus(liftA, delA), set_minus(liftB, delB)};
}

}  // namespace sumsets
