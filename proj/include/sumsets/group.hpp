#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sumsets/bitset.hpp"
#include "sumsets/errors.hpp"

namespace sumsets {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A finite abelian group whose elements are ids 0..order-1 in canonical
// order.  Three flavours share one interface:
//   - Concrete: direct product of cyclic factors; an id is the mixed-radix
//     encoding of the residue vector, so id order == lexicographic order
//     on coordinate vectors.
//   - Quotient: built from a base group and a kernel; ids are coset
//     indices ordered by the minimal coset representative.
//   - Subview: a subgroup of a base group promoted to an ambient group of
//     its own; ids follow the base order of its elements.
// Quotients and subviews keep a pointer into their base group, so element
// coordinates always resolve down to the root concrete group.
class Group {
 public:
  static GroupPtr make(std::vector<int> moduli) {
    for (int m : moduli)
      require(m >= 1, ErrorKind::Domain, "modulus must be >= 1");
    require(!moduli.empty(), ErrorKind::Domain, "group needs at least one factor");
    auto g = std::make_shared<Group>(Private{});
    g->kind_ = Kind::Concrete;
    g->moduli_ = std::move(moduli);
    long long n = 1;
    for (int m : g->moduli_) {
      n *= m;
      require(n <= kMaxOrder, ErrorKind::Resource,
              "group order exceeds supported range");
    }
    g->order_ = (int)n;
    g->strides_.assign(g->moduli_.size(), 1);
    for (int i = (int)g->moduli_.size() - 2; i >= 0; --i)
      g->strides_[i] = g->strides_[i + 1] * g->moduli_[i + 1];
    g->maybe_build_tables();
    return g;
  }

  static GroupPtr make_quotient(GroupPtr base, const DynBitset& kernel) {
    auto g = std::make_shared<Group>(Private{});
    g->kind_ = Kind::Quotient;
    g->base_ = std::move(base);
    const Group& B = *g->base_;
    g->project_.assign(B.order(), -1);
    for (int x = 0; x < B.order(); ++x) {
      if (g->project_[x] >= 0) continue;
      int cid = (int)g->rep_.size();
      g->rep_.push_back(x);  // x is minimal in its coset: ids ascend
      kernel.for_each([&](int h) { g->project_[B.add(x, h)] = cid; });
    }
    g->order_ = (int)g->rep_.size();
    g->maybe_build_tables();
    return g;
  }

  static GroupPtr make_subview(GroupPtr base, const DynBitset& members) {
    auto g = std::make_shared<Group>(Private{});
    g->kind_ = Kind::Subview;
    g->base_ = std::move(base);
    g->project_.assign(g->base_->order(), -1);
    members.for_each([&](int x) {
      g->project_[x] = (int)g->rep_.size();
      g->rep_.push_back(x);
    });
    g->order_ = (int)g->rep_.size();
    g->maybe_build_tables();
    return g;
  }

  int order() const { return order_; }
  int zero() const { return 0; }
  bool trivial() const { return order_ == 1; }

  int add(int a, int b) const {
    if (!add_table_.empty()) return add_table_[(size_t)a * order_ + b];
    return add_slow(a, b);
  }
  int neg(int a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    return neg_slow(a);
  }
  int sub(int a, int b) const { return add(a, neg(b)); }

  // Coordinates of an element in the root concrete group.
  std::vector<int> coords(int id) const {
    if (kind_ == Kind::Concrete) {
      std::vector<int> c(moduli_.size());
      for (size_t i = 0; i < moduli_.size(); ++i) {
        c[i] = id / strides_[i];
        id %= strides_[i];
      }
      return c;
    }
    return base_->coords(rep_[id]);
  }

  int id_from_coords(const std::vector<int>& c) const {
    if (kind_ == Kind::Concrete) {
      require(c.size() == moduli_.size(), ErrorKind::Domain,
              "element has wrong number of coordinates");
      long long id = 0;
      for (size_t i = 0; i < c.size(); ++i) {
        require(c[i] >= 0 && c[i] < moduli_[i], ErrorKind::Domain,
                "coordinate out of range");
        id += (long long)c[i] * strides_[i];
      }
      return (int)id;
    }
    int base_id = base_->id_from_coords(c);
    if (kind_ == Kind::Quotient) return project_[base_id];
    int sid = project_[base_id];
    require(sid >= 0, ErrorKind::Domain, "element not in subgroup view");
    return sid;
  }

  // Base-group bookkeeping for quotient and subview groups.
  bool is_concrete() const { return kind_ == Kind::Concrete; }
  bool is_quotient() const { return kind_ == Kind::Quotient; }
  const GroupPtr& base() const { return base_; }
  int rep_in_base(int id) const { return rep_[id]; }
  int project_from_base(int base_id) const { return project_[base_id]; }

  const std::vector<int>& moduli() const {
    require(kind_ == Kind::Concrete, ErrorKind::Domain,
            "moduli are defined for concrete groups only");
    return moduli_;
  }

  // Spec string "Z<n>xZ<n>..." for concrete groups; derived groups render
  // through their base.
  std::string spec() const {
    if (kind_ == Kind::Concrete) {
      std::string s;
      for (size_t i = 0; i < moduli_.size(); ++i) {
        if (i) s += 'x';
        s += 'Z' + std::to_string(moduli_[i]);
      }
      return s;
    }
    return base_->spec() + (kind_ == Kind::Quotient ? "/[kernel]" : "|[sub]");
  }

  bool exponent_two() const {
    for (int x = 1; x < order_; ++x)
      if (add(x, x) != 0) return false;
    return true;
  }

  // Structural equality; pointer-distinct but equal groups interoperate.
  bool same_as(const Group& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_ || order_ != o.order_) return false;
    if (kind_ == Kind::Concrete) return moduli_ == o.moduli_;
    return rep_ == o.rep_ && base_->same_as(*o.base_);
  }

  struct Private {};  // make_shared needs a public ctor; factories gate it
  explicit Group(Private) {}

  // Lazy per-group subgroup table; see subgroups.hpp.
  mutable std::shared_ptr<const void> subgroup_cache_;

  static constexpr long long kMaxOrder = 1 << 24;
  static constexpr int kMaxTableOrder = 512;

 private:
  enum class Kind { Concrete, Quotient, Subview };

  int add_slow(int a, int b) const {
    switch (kind_) {
      case Kind::Concrete: {
        long long id = 0;
        for (size_t i = 0; i < moduli_.size(); ++i) {
          int ai = (a / strides_[i]) % moduli_[i];
          int bi = (b / strides_[i]) % moduli_[i];
          int s = ai + bi;
          if (s >= moduli_[i]) s -= moduli_[i];
          id += (long long)s * strides_[i];
        }
        return (int)id;
      }
      case Kind::Quotient:
        return project_[base_->add(rep_[a], rep_[b])];
      case Kind::Subview:
        return project_[base_->add(rep_[a], rep_[b])];
    }
    return 0;
  }

  int neg_slow(int a) const {
    switch (kind_) {
      case Kind::Concrete: {
        long long id = 0;
        for (size_t i = 0; i < moduli_.size(); ++i) {
          int ai = (a / strides_[i]) % moduli_[i];
          int s = ai == 0 ? 0 : moduli_[i] - ai;
          id += (long long)s * strides_[i];
        }
        return (int)id;
      }
      case Kind::Quotient:
        return project_[base_->neg(rep_[a])];
      case Kind::Subview:
        return project_[base_->neg(rep_[a])];
    }
    return 0;
  }

  void maybe_build_tables() {
    if (order_ > kMaxTableOrder) return;
    neg_table_.resize(order_);
    for (int a = 0; a < order_; ++a) neg_table_[a] = neg_slow(a);
    add_table_.resize((size_t)order_ * order_);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        add_table_[(size_t)a * order_ + b] = add_slow(a, b);
  }

  Kind kind_ = Kind::Concrete;
  int order_ = 1;
  std::vector<int> moduli_;
  std::vector<int> strides_;
  GroupPtr base_;
  std::vector<int> rep_;      // our id -> base id
  std::vector<int> project_;  // base id -> our id (or -1 outside a subview)
  std::vector<int> add_table_;
  std::vector<int> neg_table_;
};

// Grammar: Z<n>(xZ<n>)*, each n >= 1.  Factor order is kept as written.
inline GroupPtr parse_group(const std::string& text) {
  if (text.empty()) throw_parse("empty group spec");
  std::vector<int> moduli;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('x', pos);
    std::string tok = text.substr(pos, end == std::string::npos ? end : end - pos);
    if (tok.size() < 2 || tok[0] != 'Z')
      throw_parse("malformed group token '" + tok + "' (expected Z<n>)");
    for (size_t i = 1; i < tok.size(); ++i)
      if (!std::isdigit((unsigned char)tok[i]))
        throw_parse("malformed group token '" + tok + "' (expected Z<n>)");
    long long n = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
      n = n * 10 + (tok[i] - '0');
      if (n > Group::kMaxOrder) throw_parse("modulus too large in token '" + tok + "'");
    }
    if (n == 0) throw_parse("zero modulus in token '" + tok + "'");
    moduli.push_back((int)n);
    if (end == std::string::npos) break;
    pos = end + 1;
    if (pos == text.size()) throw_parse("trailing 'x' in group spec");
  }
  return Group::make(std::move(moduli));
}

// Least k >= 1 with k*g = 0.  Concrete groups use the componentwise lcm
// identity; derived groups fall back to iteration.
inline long long element_order(const Group& g, int id) {
  require(id >= 0 && id < g.order(), ErrorKind::Domain, "element id out of range");
  if (g.is_concrete()) {
    std::vector<int> c = g.coords(id);
    const std::vector<int>& m = g.moduli();
    long long k = 1;
    for (size_t i = 0; i < c.size(); ++i) {
      long long oi = m[i] / std::gcd((long long)m[i], (long long)c[i]);
      k = std::lcm(k, oi);
    }
    return k;
  }
  long long k = 1;
  int x = id;
  while (x != 0) {
    x = g.add(x, id);
    ++k;
  }
  return k;
}

}  // namespace sumsets
