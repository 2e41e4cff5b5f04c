#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nlf/bits.hpp"
#include "nlf/params.hpp"
#include "oracle/naive_cipher.hpp"

namespace testsupport {

inline nlf::Bits random_bits(std::size_t n, std::mt19937_64& rng) {
  nlf::Bits b(n);
  for (auto& w : b.words()) w = rng();
  b.trim();
  return b;
}

inline std::string random_hex(std::size_t digits, std::mt19937_64& rng) {
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (std::size_t i = 0; i < digits; ++i) s += hex[rng() % 16];
  return s;
}

inline oracle::NaiveCipher naive_for(int level) {
  const auto& r = nlf::params::row(level);
  std::vector<int> d(r.d.begin(), r.d.end());
  return oracle::NaiveCipher(r.level, static_cast<int>(r.L), static_cast<int>(r.m), r.poly, r.posX,
                             r.posY, d);
}

}  // namespace testsupport
