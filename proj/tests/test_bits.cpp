#include <gtest/gtest.h>

#include <random>

#include "nlf/bits.hpp"
#include "support.hpp"

using nlf::Bits;

TEST(Bits, HexRoundTrip) {
  const Bits b = Bits::from_hex("d569a664f500763506c3");
  EXPECT_EQ(b.size(), 80u);
  EXPECT_EQ(b.to_hex(), "d569a664f500763506c3");
  EXPECT_TRUE(b.get(0));   // d = 1101
  EXPECT_TRUE(b.get(1));
  EXPECT_FALSE(b.get(2));
  EXPECT_TRUE(b.get(3));
}

TEST(Bits, HexRejectsBadInput) {
  EXPECT_THROW(Bits::from_hex("12g4"), std::invalid_argument);
  EXPECT_THROW(Bits::from_hex("123", 16), std::invalid_argument);
  EXPECT_THROW(Bits::from_hex("f", 3), std::invalid_argument);  // sets bit 3
  EXPECT_NO_THROW(Bits::from_hex("e", 3));
}

TEST(Bits, BinaryAndPositions) {
  const Bits b = Bits::from_binary("10100");
  EXPECT_EQ(b.ones(), (std::vector<std::size_t>{0, 2}));
  const std::size_t pos[] = {0, 2};
  EXPECT_EQ(Bits::from_positions(5, pos), b);
  EXPECT_EQ(b.to_binary(), "10100");
  EXPECT_THROW(Bits::from_binary("102"), std::invalid_argument);
}

TEST(Bits, ShiftsMatchNaive) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 5u, 63u, 64u, 65u, 163u, 521u}) {
    const Bits b = testsupport::random_bits(n, rng);
    for (std::size_t t : {0u, 1u, 7u, 63u, 64u, 65u, 200u}) {
      const Bits up = b.shifted_up(t), down = b.shifted_down(t);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(up.get(i), i >= t && b.get(i - t)) << n << " " << t << " " << i;
        EXPECT_EQ(down.get(i), i + t < n && b.get(i + t)) << n << " " << t << " " << i;
      }
    }
  }
}

TEST(Bits, Extract64ReadsZeroPastEnd) {
  std::mt19937_64 rng(3);
  const Bits b = testsupport::random_bits(100, rng);
  for (std::size_t off : {0u, 1u, 36u, 63u, 64u, 99u}) {
    const auto v = b.extract64(off);
    for (std::size_t k = 0; k < 64; ++k) {
      EXPECT_EQ(((v >> k) & 1) != 0, off + k < 100 && b.get(off + k));
    }
  }
}

TEST(Bits, ReverseParityPopcount) {
  const Bits a = Bits::from_binary("1101001");
  EXPECT_EQ(a.reversed().to_binary(), "1001011");
  EXPECT_EQ(a.popcount(), 4u);
  const Bits m = Bits::from_binary("1001001");
  EXPECT_EQ(a.popcount_and(m), 3u);
  EXPECT_TRUE(a.parity_and(m));
  EXPECT_THROW(a ^ Bits(3), std::invalid_argument);
}
