#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mols {

// Largest grid supported by the fixed-width point set: s <= 11, v = s*s <= 121.
inline constexpr int kMaxPoints = 128;
inline constexpr int kMaxOrder = 11;

// Fixed 128-bit set of grid points (0-based treatment indices).
class PointSet {
 public:
  constexpr PointSet() = default;

  static PointSet of(std::span<const int> points) {
    PointSet s;
    for (int p : points) s.insert(p);
    return s;
  }

  static PointSet first_n(int n) {
    PointSet s;
    for (int w = 0; w < 2; ++w) {
      int lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  constexpr void insert(int p) { words_[p >> 6] |= std::uint64_t{1} << (p & 63); }
  constexpr void erase(int p) { words_[p >> 6] &= ~(std::uint64_t{1} << (p & 63)); }
  [[nodiscard]] constexpr bool contains(int p) const {
    return (words_[p >> 6] >> (p & 63)) & 1U;
  }

  [[nodiscard]] constexpr int size() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  [[nodiscard]] constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

  // Smallest member, or -1 when empty.
  [[nodiscard]] constexpr int first() const {
    if (words_[0] != 0) return std::countr_zero(words_[0]);
    if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
    return -1;
  }

  [[nodiscard]] std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int p) { out.push_back(p); });
    return out;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  constexpr PointSet& operator&=(const PointSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  constexpr PointSet& operator|=(const PointSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  // Set difference.
  constexpr PointSet& operator-=(const PointSet& o) {
    words_[0] &= ~o.words_[0];
    words_[1] &= ~o.words_[1];
    return *this;
  }

  friend constexpr PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend constexpr PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend constexpr PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  [[nodiscard]] constexpr bool intersects(const PointSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }
  [[nodiscard]] constexpr int intersection_size(const PointSet& o) const {
    return std::popcount(words_[0] & o.words_[0]) + std::popcount(words_[1] & o.words_[1]);
  }
  [[nodiscard]] constexpr bool is_subset_of(const PointSet& o) const {
    return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
  }

  friend constexpr bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::array<std::uint64_t, 2> words_{};
};

// Growable bit row, used for compatibility relations over block indices.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  [[nodiscard]] bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  void and_with(const BitRow& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  }
  [[nodiscard]] bool any_common(const BitRow& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & o.words_[w]) != 0) return true;
    }
    return false;
  }
  [[nodiscard]] bool none() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  // Calls f(i) for each set bit of (this & mask), in increasing order.
  template <typename F>
  void for_each_common(const BitRow& mask, F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w] & mask.words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend BitRow operator&(BitRow a, const BitRow& b) {
    a.and_with(b);
    return a;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace mols
