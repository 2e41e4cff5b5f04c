#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nlf {

// Fixed-length bit string packed into 64-bit words. Bit i lives in word i/64
// at position i%64. What "index 0" means (leftmost character, register cell
// u_0, ...) is up to the caller; the text conversions treat index 0 as the
// leftmost character. Padding bits past size() are always zero.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size);

  // Hex text, first digit leftmost: index 0 is the high bit of the first digit.
  static Bits from_hex(std::string_view hex);
  // Same, but truncated/checked to exactly `size` bits (hex must cover it).
  static Bits from_hex(std::string_view hex, std::size_t size);
  // '0'/'1' characters, index 0 first.
  static Bits from_binary(std::string_view text);
  static Bits from_positions(std::size_t size, std::span<const std::size_t> ones);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  bool operator[](std::size_t i) const { return get(i); }

  std::size_t popcount() const;
  bool any() const;
  std::vector<std::size_t> ones() const;

  // Lowercase hex; a partial final digit is zero-padded on the right.
  std::string to_hex() const;
  std::string to_binary() const;

  // new[i] = old[i - t] (moves bits toward higher indices, zero fill).
  Bits shifted_up(std::size_t t) const;
  // new[i] = old[i + t] (moves bits toward lower indices, zero fill).
  Bits shifted_down(std::size_t t) const;
  Bits reversed() const;

  std::size_t popcount_and(const Bits& other) const;
  bool parity_and(const Bits& other) const;

  // 64 consecutive bits starting at `offset`; bits past size() read as zero.
  std::uint64_t extract64(std::size_t offset) const;

  Bits& operator^=(const Bits& other);
  Bits& operator&=(const Bits& other);
  Bits& operator|=(const Bits& other);
  friend Bits operator^(Bits a, const Bits& b) { return a ^= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend bool operator==(const Bits&, const Bits&) = default;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }
  // Zeroes padding bits after direct word manipulation.
  void trim();

 private:
  void require_same_size(const Bits& other) const;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

std::size_t word_count(std::size_t bits);

}  // namespace nlf
