#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "nlf/params.hpp"
#include "nlf/tapsearch.hpp"

using nlf::Bits;
using namespace nlf::taps;
namespace cipher = nlf::cipher;

namespace {

// Overlap count of a 0/1 string with itself moved t places, over text.
int overlap_max(const std::string& s, std::size_t tmax_exclusive) {
  int best = 0;
  for (std::size_t t = 1; t < tmax_exclusive && t < s.size(); ++t) {
    int n = 0;
    for (std::size_t q = 0; q + t < s.size(); ++q) n += s[q] == '1' && s[q + t] == '1';
    best = std::max(best, n);
  }
  return best;
}

// Register picture u_{L-1} .. u_0 with a 1 under every filter tap.
std::string tap_picture(const cipher::TapLayout& t) {
  std::string s(t.L, '0');
  auto mark = [&](std::size_t cell) { s[t.L - 1 - cell] = '1'; };
  for (std::size_t p = 0; p < t.m(); ++p) {
    mark(t.x_cell(p));
    mark(t.y_cell(p));
  }
  mark(t.wtap);
  return s;
}

// Every (shift, p) pair set compared against every other.
bool qterm_bruteforce(const cipher::TapLayout& t, std::size_t L, std::size_t tmax) {
  const std::size_t m = t.m();
  std::vector<std::set<std::size_t>> sets;
  for (std::size_t s = 0; s <= tmax; ++s) {
    for (std::size_t p = 0; p < m; ++p) sets.push_back({L + s - 1 - t.i[p], L + s - 1 - t.j[m - 1 - p]});
  }
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if (sets[a] == sets[b]) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Overlap, ToyExample) {
  EXPECT_EQ(nu_of(Bits::from_binary("10100")), 1);
  EXPECT_EQ(nu_of(Bits::from_binary("11111")), 4);
  EXPECT_EQ(nu_of(Bits::from_binary("10000")), 0);
}

TEST(Overlap, TableValues) {
  for (const auto& r : nlf::params::table()) {
    const auto p = cipher::load_params(r.level);
    const auto layout = cipher::derive_taps(p);
    const auto pos = PosVector::from_layout(layout);
    EXPECT_EQ(nu_of(p.posX), r.nu) << r.level;
    EXPECT_EQ(delta_of(pos), r.delta) << r.level;
    EXPECT_EQ(nu_of(p.posX), overlap_max(p.posX.to_binary(), p.posX.size()));
    EXPECT_EQ(delta_of(pos), overlap_max(tap_picture(layout), 2 * static_cast<std::size_t>(r.level)));
    EXPECT_LE(r.nu, static_cast<int>(r.m / 2));
  }
}

TEST(Overlap, MatchesStringOracleOnRandomStrings) {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 2 + rng() % 150;
    Bits b(n);
    std::string s(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
      if (rng() & 1) {
        b.set(q);
        s[q] = '1';
      }
    }
    const std::size_t tmax = 1 + rng() % (n + 5);
    EXPECT_EQ(max_shift_overlap(b, tmax), overlap_max(s, tmax));
    // wt(s & s>>t) = wt(s>>t & s): the reversed string has the same profile.
    EXPECT_EQ(max_shift_overlap(b.reversed(), tmax), max_shift_overlap(b, tmax));
  }
}

TEST(PosVector, RoundTripsTapStrings) {
  for (int lv : cipher::kLevels) {
    const auto p = cipher::load_params(lv);
    const auto pos = PosVector::from_strings(p.kappa, p.L, p.posX, p.posY);
    EXPECT_EQ(pos.pos_x(), p.posX);
    EXPECT_EQ(pos.pos_y(), p.posY);
    EXPECT_EQ(pos.cells.popcount(), 2 * p.m + 1);
  }
}

TEST(UniformBelow, RangeAndRoughUniformity) {
  std::mt19937_64 rng(5);
  EXPECT_THROW(uniform_below(rng, 0), std::invalid_argument);
  EXPECT_EQ(uniform_below(rng, 1), 0u);
  std::vector<int> counts(7);
  for (int k = 0; k < 70000; ++k) ++counts[uniform_below(rng, 7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(RandomPos, ShapeAndEndpoints) {
  std::mt19937_64 rng(6);
  for (int lv : cipher::kLevels) {
    const auto p = cipher::load_params(lv);
    for (int rep = 0; rep < 20; ++rep) {
      const auto pos = random_pos(lv, p.L, p.m, rng);
      const auto t = pos.layout();
      ASSERT_EQ(t.m(), p.m);
      EXPECT_EQ(t.i.front(), 0u);
      EXPECT_EQ(t.j.back(), 2 * static_cast<std::size_t>(lv) - 2);
      EXPECT_LT(t.i.back(), static_cast<std::size_t>(lv));
      EXPECT_GE(t.j.front(), static_cast<std::size_t>(lv));
      EXPECT_TRUE(pos.pos_x().get(0));
      EXPECT_FALSE(pos.pos_y().get(lv - 1));
      EXPECT_EQ(pos.cells.popcount(), 2 * p.m + 1);
    }
  }
  EXPECT_THROW(random_pos(8, 19, 8, rng), std::invalid_argument);
}

TEST(RandomPos, DeterministicPerSeed) {
  std::mt19937_64 a(77), b(77);
  EXPECT_EQ(random_pos(128, 257, 59, a).cells, random_pos(128, 257, 59, b).cells);
}

TEST(Search, DeterministicAndThreadIndependent) {
  const auto one = search(80, 163, 37, 200, 42, 1);
  const auto four = search(80, 163, 37, 200, 42, 4);
  EXPECT_EQ(one.pos.cells, four.pos.cells);
  EXPECT_EQ(one.nu, four.nu);
  EXPECT_EQ(one.best_trial, four.best_trial);
  EXPECT_EQ(one.trials, 200u);
  EXPECT_EQ(one.nu, nu_of(one.pos.pos_x()));
  EXPECT_EQ(one.delta, delta_of(one.pos));
  EXPECT_EQ(search(80, 163, 37, 200, 42, 3).pos.cells, one.pos.cells);
}

TEST(Search, WinnerIsMinimumOverTrials) {
  const std::uint64_t trials = 64;
  const auto r = search(80, 163, 37, trials, 9, 2);
  int best = 1 << 30;
  std::uint64_t at = 0;
  for (std::uint64_t tr = 0; tr < trials; ++tr) {
    std::mt19937_64 rng(trial_seed(9, tr));
    const int nu = nu_of(random_pos(80, 163, 37, rng).pos_x());
    if (nu < best) {
      best = nu;
      at = tr;
    }
  }
  EXPECT_EQ(r.nu, best);
  EXPECT_EQ(r.best_trial, at);
}

TEST(Search, SingleTrial) {
  const auto r = search(128, 257, 59, 1, 0);
  std::mt19937_64 rng(trial_seed(0, 0));
  EXPECT_EQ(r.pos.cells, random_pos(128, 257, 59, rng).cells);
  EXPECT_EQ(r.best_trial, 0u);
  EXPECT_THROW(search(128, 257, 59, 0, 0), std::invalid_argument);
}

TEST(Qterm, ToyLayout) {
  const auto t = cipher::derive_taps(5, 12, Bits::from_binary("10100"), Bits::from_binary("01010"));
  EXPECT_TRUE(qterm_distinct(t, 12, 50));
  EXPECT_TRUE(qterm_bruteforce(t, 12, 50));
}

TEST(Qterm, NegativeControl) {
  // j listed out of order so both products share the offset difference 6.
  cipher::TapLayout t;
  t.kappa = 5;
  t.L = 12;
  t.i = {0, 2};
  t.j = {8, 6};
  t.wtap = 2;
  EXPECT_TRUE(qterm_distinct(t, 12, 1));
  EXPECT_FALSE(qterm_distinct(t, 12, 2));
  EXPECT_FALSE(qterm_bruteforce(t, 12, 2));
}

TEST(Qterm, AgreesWithBruteForce) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 200; ++rep) {
    cipher::TapLayout t;
    t.kappa = 16;
    t.L = 40;
    const std::size_t m = 1 + rng() % 5;
    for (std::size_t p = 0; p < m; ++p) {
      t.i.push_back(rng() % 16);
      t.j.push_back(16 + rng() % 15);
    }
    const std::size_t tmax = rng() % 20;
    EXPECT_EQ(qterm_distinct(t, t.L, tmax), qterm_bruteforce(t, t.L, tmax));
  }
  for (int lv : cipher::kLevels) {
    const auto p = cipher::load_params(lv);
    EXPECT_TRUE(qterm_distinct(cipher::derive_taps(p), p.L, 4 * p.L)) << lv;
  }
}

TEST(Fsga, Level128Margin) {
  const auto& r = nlf::params::row(128);
  const std::size_t n = 2 * r.m + 1;
  const auto f = fsga_margin(n, r.L, r.delta, 128);
  EXPECT_EQ(f.c, 3u);
  const double L = static_cast<double>(r.L);
  const double expect = 3.0 * (n - 1) - 3.0 * r.delta + std::log2(L * L * L + L * n);
  EXPECT_NEAR(f.log2_complexity, expect, 1e-9);
  EXPECT_NEAR(f.log2_complexity, 207.0, 0.5);
  EXPECT_TRUE(f.pass);
  EXPECT_NEAR(f.log2_complexity_c2, 2.0 * (n - 1) - r.delta + std::log2(L * L * L + L * n), 1e-9);
}

TEST(Fsga, EveryLevelPasses) {
  for (const auto& r : nlf::params::table()) {
    const auto f = fsga_margin(2 * r.m + 1, r.L, r.delta, r.level);
    EXPECT_TRUE(f.pass) << r.level;
    EXPECT_GE(f.c * (2 * r.m + 1), r.L);
    EXPECT_LT((f.c - 1) * (2 * r.m + 1), r.L);
  }
}

TEST(Json, SearchAndMargin) {
  const auto r = search(80, 163, 37, 10, 1, 1);
  const auto j = to_json(r);
  EXPECT_EQ(j["nu"], r.nu);
  EXPECT_EQ(j["trials"], 10);
  const auto f = to_json(fsga_margin(119, 257, 30, 128));
  EXPECT_TRUE(f.contains("log2_complexity"));
}
