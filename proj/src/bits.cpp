#include "nlf/bits.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nlf {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

Bits::Bits(std::size_t size) : size_(size), words_(word_count(size), 0) {}

Bits Bits::from_hex(std::string_view hex) { return from_hex(hex, hex.size() * 4); }

Bits Bits::from_hex(std::string_view hex, std::size_t size) {
  if (hex.size() != (size + 3) / 4) {
    throw std::invalid_argument("hex string has " + std::to_string(hex.size()) +
                                " digits, expected " + std::to_string((size + 3) / 4));
  }
  Bits out(size);
  for (std::size_t d = 0; d < hex.size(); ++d) {
    const int v = hex_value(hex[d]);
    if (v < 0) throw std::invalid_argument("malformed hex digit '" + std::string(1, hex[d]) + "'");
    for (int b = 0; b < 4; ++b) {
      const std::size_t i = d * 4 + b;
      const bool bit = (v >> (3 - b)) & 1;
      if (i < size) {
        out.set(i, bit);
      } else if (bit) {
        throw std::invalid_argument("hex string sets bits past the declared length");
      }
    }
  }
  return out;
}

Bits Bits::from_binary(std::string_view text) {
  Bits out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      out.set(i);
    } else if (text[i] != '0') {
      throw std::invalid_argument("binary string may only contain 0 and 1");
    }
  }
  return out;
}

Bits Bits::from_positions(std::size_t size, std::span<const std::size_t> ones) {
  Bits out(size);
  for (auto i : ones) {
    if (i >= size) throw std::out_of_range("bit position " + std::to_string(i) + " out of range");
    out.set(i);
  }
  return out;
}

void Bits::set(std::size_t i, bool v) {
  const auto mask = std::uint64_t{1} << (i & 63);
  if (v) {
    words_[i >> 6] |= mask;
  } else {
    words_[i >> 6] &= ~mask;
  }
}

std::size_t Bits::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool Bits::any() const {
  return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
}

std::vector<std::size_t> Bits::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto word = words_[w];
    while (word) {
      out.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return out;
}

std::string Bits::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out((size_ + 3) / 4, '0');
  for (std::size_t d = 0; d < out.size(); ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t i = d * 4 + b;
      v = (v << 1) | (i < size_ && get(i) ? 1 : 0);
    }
    out[d] = kDigits[v];
  }
  return out;
}

std::string Bits::to_binary() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

Bits Bits::shifted_up(std::size_t t) const {
  Bits out(size_);
  if (t >= size_) return out;
  const std::size_t ws = t / 64, bs = t % 64;
  for (std::size_t w = words_.size(); w-- > ws;) {
    std::uint64_t v = words_[w - ws] << bs;
    if (bs != 0 && w - ws >= 1) v |= words_[w - ws - 1] >> (64 - bs);
    out.words_[w] = v;
  }
  out.trim();
  return out;
}

Bits Bits::shifted_down(std::size_t t) const {
  Bits out(size_);
  if (t >= size_) return out;
  const std::size_t ws = t / 64, bs = t % 64;
  for (std::size_t w = 0; w + ws < words_.size(); ++w) {
    std::uint64_t v = words_[w + ws] >> bs;
    if (bs != 0 && w + ws + 1 < words_.size()) v |= words_[w + ws + 1] << (64 - bs);
    out.words_[w] = v;
  }
  return out;
}

Bits Bits::reversed() const {
  Bits out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out.set(size_ - 1 - i);
  }
  return out;
}

std::size_t Bits::popcount_and(const Bits& other) const {
  require_same_size(other);
  std::size_t n = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) n += std::popcount(words_[w] & other.words_[w]);
  return n;
}

bool Bits::parity_and(const Bits& other) const {
  require_same_size(other);
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::uint64_t Bits::extract64(std::size_t offset) const {
  const std::size_t w = offset / 64, b = offset % 64;
  if (w >= words_.size()) return 0;
  std::uint64_t v = words_[w] >> b;
  if (b != 0 && w + 1 < words_.size()) v |= words_[w + 1] << (64 - b);
  return v;
}

Bits& Bits::operator^=(const Bits& other) {
  require_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

Bits& Bits::operator&=(const Bits& other) {
  require_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Bits& Bits::operator|=(const Bits& other) {
  require_same_size(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

void Bits::trim() {
  if (size_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

void Bits::require_same_size(const Bits& other) const {
  if (other.size_ != size_) {
    throw std::invalid_argument("bit string length mismatch: " + std::to_string(size_) + " vs " +
                                std::to_string(other.size_));
  }
}

}  // namespace nlf
