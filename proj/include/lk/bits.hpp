#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace lk {

// Fixed-width bitset sized at runtime. Used for subsets of groups and partial groups.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }

  Bits &operator&=(const Bits &o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits &operator|=(const Bits &o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits &subtract(const Bits &o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits &b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits &b) { return a |= b; }

  bool subset_of(const Bits &o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bits &o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool operator==(const Bits &o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const Bits &o) const { return w_ < o.w_; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < w_.size(); ++k) {
      uint64_t x = w_[k];
      while (x) {
        out.push_back(int(k * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
    return out;
  }

  template <class F> void for_each(F &&f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      uint64_t x = w_[k];
      while (x) {
        f(int(k * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (auto x : w_) h = h * 0x9E3779B97F4A7C15ull ^ (x + (h >> 7));
    return h;
  }

  static Bits full(std::size_t n) {
    Bits b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i);
    return b;
  }
  static Bits of(std::size_t n, const std::vector<int> &xs) {
    Bits b(n);
    for (int x : xs) b.set(std::size_t(x));
    return b;
  }

private:
  std::size_t n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits &b) const { return b.hash(); }
};

// Subgroups of the ambient p-group are stored as 64-bit masks over its local indices.
using Mask = uint64_t;

inline int mask_order(Mask m) { return std::popcount(m); }
inline bool mask_le(Mask a, Mask b) { return (a & ~b) == 0; }

} // namespace lk
