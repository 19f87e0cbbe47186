#pragma once

#include <compare>
#include <span>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace boxcover {

/// Fixed-width bitvector used for fiber labels (subsets of S) and parity
/// vectors (subsets of E). Bit i is the coefficient of 2^i when the vector is
/// read as an integer, so ordering and hex output follow integer order.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t width);

  static Bits from_uint(std::size_t width, std::uint64_t value);
  /// Parses the hex produced by to_hex(). Digits beyond `width` must be zero.
  static Bits from_hex(std::size_t width, std::string_view hex);

  std::size_t width() const { return width_; }
  bool empty() const { return width_ == 0; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  Bits& operator^=(const Bits& other);
  friend Bits operator^(Bits lhs, const Bits& rhs) { return lhs ^= rhs; }

  std::size_t count() const;
  bool none() const;

  /// Indices of set bits in ascending order.
  std::vector<std::size_t> ones() const;

  /// Value as an integer; requires width() <= 64.
  std::uint64_t to_uint() const;

  /// Lower-case hex of the integer value, zero padded to ceil(width/4) digits
  /// (at least one digit).
  std::string to_hex() const;

  std::size_t hash() const;

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const Bits&, const Bits&) = default;
  friend std::strong_ordering operator<=>(const Bits& a, const Bits& b);

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace boxcover
