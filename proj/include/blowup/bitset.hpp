#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace blowup {

// Fixed-universe dynamic bitset. All vertex sets in the library are of this
// type; the universe size is the host graph's vertex count.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() { for (auto& w : words_) w = 0; }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_) if (w) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int intersection_count(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
  friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }

  // Lowest set bit, or -1.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }
  int next(int i) const {  // lowest set bit > i, or -1
    ++i;
    if (i >= n_) return -1;
    size_t wi = size_t(i) >> 6;
    uint64_t w = words_[wi] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (w) return int(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  static Bitset from_vector(int universe, const std::vector<int>& ids) {
    Bitset b(universe);
    for (int v : ids) b.set(v);
    return b;
  }
  static Bitset full(int universe) {
    Bitset b(universe);
    for (int i = 0; i < universe; ++i) b.set(i);
    return b;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> words_;
};

using VertexSet = Bitset;

}  // namespace blowup
