#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace zdg {

// Fixed-size bitset sized at runtime. Trailing bits of the last word are
// kept zero so equality and hashing can work on whole words.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  void set_all() {
    for (auto& w : w_) w = ~uint64_t{0};
    trim();
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }

  Bitset& operator|=(const Bitset& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  // Next set bit at position >= from, or -1.
  int next(int from) const {
    if (from >= n_) return -1;
    int word = from >> 6;
    uint64_t w = w_[word] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (word << 6) + __builtin_ctzll(w);
      if (++word >= (int)w_.size()) return -1;
      w = w_[word];
    }
  }

  size_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return (size_t)h;
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (uint64_t{1} << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace zdg
