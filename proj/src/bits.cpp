#include "boxcover/bits.hpp"

#include <bit>

#include "boxcover/errors.hpp"

namespace boxcover {

namespace {

std::size_t word_count(std::size_t width) { return (width + 63) / 64; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bits::Bits(std::size_t width) : width_(width), words_(word_count(width), 0) {}

Bits Bits::from_uint(std::size_t width, std::uint64_t value) {
  Bits b(width);
  if (width < 64 && (value >> width) != 0) {
    throw InvalidInput("value " + std::to_string(value) + " does not fit in " +
                       std::to_string(width) + " bits");
  }
  if (width > 0) b.words_[0] = value;
  return b;
}

Bits Bits::from_hex(std::size_t width, std::string_view hex) {
  if (hex.empty()) throw InvalidInput("empty hex fiber label");
  Bits b(width);
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
    const int v = hex_value(*it);
    if (v < 0) {
      throw InvalidInput("invalid hex digit in '" + std::string(hex) + "'");
    }
    for (int k = 0; k < 4; ++k) {
      if (((v >> k) & 1) == 0) continue;
      if (bit + k >= width) {
        throw InvalidInput("hex label '" + std::string(hex) +
                           "' exceeds fiber width " + std::to_string(width));
      }
      b.set(bit + k);
    }
  }
  return b;
}

Bits& Bits::operator^=(const Bits& other) {
  if (other.width_ != width_) {
    throw InvalidInput("bit width mismatch: " + std::to_string(width_) +
                       " vs " + std::to_string(other.width_));
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::size_t Bits::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Bits::none() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::vector<std::size_t> Bits::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t Bits::to_uint() const {
  if (width_ > 64) throw InvalidInput("bitvector wider than 64 bits");
  return words_.empty() ? 0 : words_[0];
}

std::string Bits::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = width_ == 0 ? 1 : (width_ + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned v = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t bit = d * 4 + k;
      if (bit < width_ && test(bit)) v |= 1U << k;
    }
    out[digits - 1 - d] = kDigits[v];
  }
  return out;
}

std::size_t Bits::hash() const {
  // splitmix-style mixing per word
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ width_;
  for (auto w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Bits& a, const Bits& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace boxcover
