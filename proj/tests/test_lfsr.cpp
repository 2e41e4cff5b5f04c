#include <gtest/gtest.h>

#include <random>
#include <set>

#include "nlf/lfsr.hpp"
#include "nlf/params.hpp"
#include "support.hpp"

using namespace nlf::lfsr;

namespace {

// Polynomials as integers, bit k = coefficient of x^k.
int deg_of(std::uint32_t p) { return 31 - __builtin_clz(p); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
  while (a && deg_of(a) >= deg_of(b)) a ^= b << (deg_of(a) - deg_of(b));
  return a;
}

// Trial division by every polynomial of degree 1..deg/2.
bool irreducible_by_division(std::uint32_t p) {
  const int d = deg_of(p);
  for (std::uint32_t q = 2; q < (1u << (d / 2 + 1)); ++q) {
    if (poly_mod(p, q) == 0) return false;
  }
  return true;
}

std::vector<int> exponents_of(std::uint32_t p) {
  std::vector<int> e;
  for (int k = 31; k >= 0; --k) {
    if ((p >> k) & 1) e.push_back(k);
  }
  return e;
}

}  // namespace

TEST(ConnectionPoly, ParseAndValidate) {
  const auto p = ConnectionPoly::parse("163,7,6,3,0");
  EXPECT_EQ(p.L(), 163u);
  EXPECT_EQ(p.coeffs().ones(), (std::vector<std::size_t>{0, 3, 6, 7}));
  EXPECT_EQ(p.max_low_tap(), 7u);
  EXPECT_EQ(p.str(), "163,7,6,3,0");
  EXPECT_EQ(ConnectionPoly::parse("4 1 0"), ConnectionPoly({0, 1, 4}));
  EXPECT_THROW(ConnectionPoly::parse("4,1"), std::invalid_argument);
  EXPECT_THROW(ConnectionPoly::parse("4,1,1,0"), std::invalid_argument);
  EXPECT_THROW(ConnectionPoly::parse("4,x,0"), std::invalid_argument);
}

TEST(NextBit, Examples) {
  const auto p = ConnectionPoly::parse("4,1,0");
  EXPECT_FALSE(nb(p, from_binary("1000")));
  EXPECT_FALSE(nb(p, from_binary("1011")));
  const auto big = ConnectionPoly::parse("163,7,6,3,0");
  LfsrState ones(163);
  for (std::size_t i = 0; i < 163; ++i) ones.set(i);
  EXPECT_FALSE(nb(big, ones));
  EXPECT_THROW(nb(big, LfsrState(162)), std::invalid_argument);
}

TEST(NextBit, Linear) {
  std::mt19937_64 rng(1);
  const auto p = ConnectionPoly::parse("257,7,5,4,3,2,0");
  for (int rep = 0; rep < 200; ++rep) {
    const auto u = testsupport::random_bits(257, rng), v = testsupport::random_bits(257, rng);
    EXPECT_EQ(nb(p, u ^ v), nb(p, u) != nb(p, v));
  }
}

TEST(NextState, Examples) {
  const auto p = ConnectionPoly::parse("4,1,0");
  EXPECT_EQ(to_binary(next_state(p, from_binary("1000"))), "0100");
  EXPECT_EQ(to_binary(prev_state(p, from_binary("0100"))), "1000");
}

TEST(NextState, ToyPeriodIsFull) {
  const auto p = ConnectionPoly::parse("4,1,0");
  const auto start = from_binary("0001");
  auto s = next_state(p, start);
  int period = 1;
  while (s != start) {
    s = next_state(p, s);
    ++period;
  }
  EXPECT_EQ(period, 15);
}

TEST(NextState, PrimitiveToysVisitEveryNonzeroState) {
  // Primitive polynomials of degree 5..8.
  for (const char* text : {"5,2,0", "6,1,0", "7,1,0", "8,4,3,2,0"}) {
    const auto p = ConnectionPoly::parse(text);
    std::set<std::string> seen;
    LfsrState s(p.L());
    s.set(0);
    const auto start = s;
    do {
      ASSERT_TRUE(s.any());
      seen.insert(to_binary(s));
      s = next_state(p, s);
    } while (s != start);
    EXPECT_EQ(seen.size(), (std::size_t{1} << p.L()) - 1) << text;
  }
}

TEST(NextState, InverseOnEveryTableLength) {
  std::mt19937_64 rng(9);
  for (const auto& r : nlf::params::table()) {
    const ConnectionPoly p(r.poly);
    for (int rep = 0; rep < 1000; ++rep) {
      const auto u = testsupport::random_bits(p.L(), rng);
      ASSERT_EQ(prev_state(p, next_state(p, u)), u);
      ASSERT_EQ(next_state(p, prev_state(p, u)), u);
    }
  }
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible(ConnectionPoly::parse("4,1,0")));
  EXPECT_FALSE(is_irreducible(ConnectionPoly::parse("4,2,0")));
  for (const auto& r : nlf::params::table()) {
    EXPECT_TRUE(is_irreducible(ConnectionPoly(r.poly))) << r.level;
  }
  // An even number of terms means x + 1 divides it.
  EXPECT_FALSE(is_irreducible(ConnectionPoly::parse("163,7,6,0")));
}

TEST(Irreducible, AgreesWithTrialDivision) {
  for (std::uint32_t p = (1u << 2) | 1; p < (1u << 13); p += 2) {
    EXPECT_EQ(is_irreducible(ConnectionPoly(exponents_of(p))), irreducible_by_division(p)) << p;
  }
}
