#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace sumsets {

// Fixed-universe dynamic bitset indexed by element rank.  All subset
// arithmetic in the library runs on this type.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : words_) if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Lowest set bit, -1 when empty.
  int first() const { return next(0); }
  // Lowest set bit >= from, -1 when none.
  int next(int from) const {
    if (from >= n_) return -1;
    int wi = from >> 6;
    uint64_t w = words_[wi] & (~uint64_t(0) << (from & 63));
    while (true) {
      if (w) return (wi << 6) + std::countr_zero(w);
      if (++wi >= (int)words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (int i = first(); i >= 0; i = next(i + 1)) f(i);
  }

  std::vector<int> to_ids() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  DynBitset& operator|=(const DynBitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  DynBitset& subtract(const DynBitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
  friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
  friend DynBitset minus(DynBitset a, const DynBitset& b) { return a.subtract(b); }

  bool operator==(const DynBitset& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const DynBitset& o) const { return !(*this == o); }

  bool is_subset_of(const DynBitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const DynBitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // Order that matches lexicographic comparison of the sorted element
  // lists (shorter prefix wins).  Used for all canonical tie-breaking.
  static int compare_lists(const DynBitset& a, const DynBitset& b) {
    int ia = a.first(), ib = b.first();
    while (ia >= 0 && ib >= 0) {
      if (ia != ib) return ia < ib ? -1 : 1;
      ia = a.next(ia + 1);
      ib = b.next(ib + 1);
    }
    if (ia < 0 && ib < 0) return 0;
    return ia < 0 ? -1 : 1;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace sumsets
