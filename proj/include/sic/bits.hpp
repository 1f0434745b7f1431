#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace sic {

/// Fixed-width vertex bitset used by the search routines. Graphs handed to
/// bitset algorithms must have at most kMaxBits vertices.
class Bits {
 public:
  static constexpr int kWords = 2;
  static constexpr int kMaxBits = 64 * kWords;

  constexpr Bits() = default;

  static Bits range(int n) {
    Bits b;
    for (int i = 0; i < kWords; ++i) {
      const int lo = 64 * i;
      if (n >= lo + 64) {
        b.w_[i] = ~std::uint64_t{0};
      } else if (n > lo) {
        b.w_[i] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return b;
  }

  static Bits single(int v) {
    Bits b;
    b.set(v);
    return b;
  }

  template <typename Range>
  static Bits of(const Range& vs) {
    Bits b;
    for (int v : vs) b.set(v);
    return b;
  }

  void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  [[nodiscard]] bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1U; }

  [[nodiscard]] int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  [[nodiscard]] bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  [[nodiscard]] bool none() const { return !any(); }

  /// Lowest set bit, or -1.
  [[nodiscard]] int first() const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i]) return 64 * i + std::countr_zero(w_[i]);
    return -1;
  }

  /// Lowest set bit strictly above v, or -1.
  [[nodiscard]] int next(int v) const {
    ++v;
    if (v >= kMaxBits) return -1;
    int i = v >> 6;
    std::uint64_t x = w_[i] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (x) return 64 * i + std::countr_zero(x);
      if (++i == kWords) return -1;
      x = w_[i];
    }
  }

  [[nodiscard]] bool subset_of(const Bits& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  [[nodiscard]] bool intersects(const Bits& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bits& operator&=(const Bits& o) {
    for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator-=(const Bits& o) {
    for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator-(Bits a, const Bits& b) { return a -= b; }
  friend bool operator==(const Bits&, const Bits&) = default;
  friend auto operator<=>(const Bits&, const Bits&) = default;

  [[nodiscard]] std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  [[nodiscard]] std::uint64_t word(int i) const { return w_[i]; }

  class iterator {
   public:
    iterator(const Bits* b, int v) : b_(b), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = b_->next(v_);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v_ != o.v_; }

   private:
    const Bits* b_;
    int v_;
  };
  [[nodiscard]] iterator begin() const { return {this, first()}; }
  [[nodiscard]] iterator end() const { return {this, -1}; }

 private:
  std::array<std::uint64_t, kWords> w_{};
};

}  // namespace sic
