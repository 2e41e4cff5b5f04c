#include <gtest/gtest.h>

#include <cmath>

#include "nlf/params.hpp"
#include "nlf/security.hpp"

using namespace nlf::security;
namespace cipher = nlf::cipher;

namespace {

// Floating-point oracles: lgamma for one binomial, log-sum-exp for the sum.
long double lbinom(std::size_t L, std::size_t k) {
  const long double ln = std::lgamma(static_cast<long double>(L) + 1) -
                         std::lgamma(static_cast<long double>(k) + 1) -
                         std::lgamma(static_cast<long double>(L - k) + 1);
  return ln / std::log(2.0L);
}

long double lbinom_sum(std::size_t L, std::size_t a) {
  long double top = lbinom(L, 0);
  for (std::size_t i = 1; i <= a; ++i) top = std::max(top, lbinom(L, i));
  long double acc = 0;
  for (std::size_t i = 0; i <= a; ++i) acc += std::exp2(lbinom(L, i) - top);
  return top + std::log2(acc);
}

}  // namespace

TEST(Binomial, SmallExamples) {
  EXPECT_DOUBLE_EQ(log2_binom_sum(4, 4), 4.0);
  EXPECT_DOUBLE_EQ(log2_binom_sum(257, 0), 0.0);
  EXPECT_DOUBLE_EQ(log2_binom(10, 5), std::log2(252.0));
  EXPECT_EQ(log2_binom(5, 6), -INFINITY);
  EXPECT_THROW(log2_binom_sum(4, 5), std::invalid_argument);
}

TEST(Binomial, MatchesLgammaOracle) {
  for (std::size_t L : {31u, 163u, 257u, 521u, 1000u}) {
    for (std::size_t k : {1u, 2u, 7u, 16u, 30u, 64u}) {
      if (k > L) continue;
      EXPECT_NEAR(log2_binom(L, k), lbinom(L, k), 1e-6) << L << " " << k;
      EXPECT_NEAR(log2_binom_sum(L, k), lbinom_sum(L, k), 1e-6) << L << " " << k;
    }
  }
}

TEST(Alpha, Examples) {
  const auto a = alpha(257, 59, 64);
  EXPECT_EQ(a.degree, 32u);
  EXPECT_NEAR(a.log2_alpha, 135.61, 0.01);
  EXPECT_TRUE(a.pass);
  const auto small = alpha(31, 8, 64);
  EXPECT_EQ(small.degree, 8u);
  EXPECT_NEAR(small.log2_alpha, 22.91, 0.01);
  EXPECT_FALSE(small.pass);
  EXPECT_EQ(alpha(163, 37, 64).degree, 32u);
  EXPECT_EQ(alpha(521, 115, 64).degree, 64u);
}

TEST(Beta, Examples) {
  EXPECT_NEAR(beta(257, 59), 364.38, 0.05);
  EXPECT_NEAR(beta(4, 1), 6.50, 0.01);
  EXPECT_NEAR(beta(4, 1), kOmega * std::log2(5.0), 1e-12);
  for (std::size_t m : {37u, 59u, 115u}) {
    EXPECT_NEAR(beta(521, m), kOmega * static_cast<double>(lbinom_sum(521, (m + 1) / 2)), 1e-6);
  }
}

TEST(Gamma, MinimisesOverSplits) {
  const auto g = gamma(257, 59);
  EXPECT_EQ(g.e + g.d, 31u);
  double best = INFINITY;
  for (std::size_t e = 1; e <= 29; ++e) {
    best = std::min(best, static_cast<double>(lbinom_sum(257, e) + lbinom_sum(257, 31 - e)));
  }
  EXPECT_NEAR(g.log2_gamma, best, 1e-6);
  EXPECT_NEAR(g.log2_gamma, 138.13, 0.01);
  EXPECT_NEAR(g.log2_d_sum, static_cast<double>(lbinom_sum(257, g.d)), 1e-6);
  EXPECT_THROW(gamma(257, 2), std::invalid_argument);
  EXPECT_NO_THROW(gamma(257, 3));
}

TEST(Gamma, NeverExceedsBeta) {
  for (const auto& r : nlf::params::table()) {
    EXPECT_LE(gamma(r.L, r.m).log2_gamma, beta(r.L, r.m)) << r.level;
  }
  for (std::size_t m = 3; m < 60; ++m) EXPECT_LE(gamma(200, m).log2_gamma, beta(200, m)) << m;
}

TEST(Monotonicity, InLengthAndHalfWidth) {
  for (std::size_t L = 100; L < 400; L += 37) {
    EXPECT_LT(beta(L, 41), beta(L + 1, 41));
    EXPECT_LT(log2_binom_sum(L, 20), log2_binom_sum(L, 21));
    EXPECT_LE(gamma(L, 41).log2_gamma, gamma(L + 1, 41).log2_gamma);
  }
  for (std::size_t m = 1; m < 100; m += 2) EXPECT_LT(beta(300, m), beta(300, m + 2));
}

TEST(Fca, Conditions) {
  const auto c = fca_conditions(257, 59, 64, 128);
  EXPECT_TRUE(c.low_weight && c.decode && c.filter_specific);
  EXPECT_TRUE(c.all());
  // Decode bound B <= 2(2m+3) fails for a narrow filter and large budget.
  const auto narrow = fca_conditions(257, 10, 128, 128);
  EXPECT_FALSE(narrow.decode);
  EXPECT_FALSE(narrow.all());
  // 2B < kappa + 4m.
  EXPECT_FALSE(fca_conditions(257, 10, 100, 40).filter_specific);
  // Exactly on the B = 2m boundary.
  EXPECT_TRUE(fca_conditions(257, 32, 64, 128).low_weight);
  // B > 2m: kappa (B - 2m) < 2 m L + B (B - 4m).
  EXPECT_EQ(fca_conditions(100, 10, 30, 80).low_weight, 80 * 10 < 2 * 10 * 100 + 30 * (30 - 40));
  EXPECT_FALSE(fca_conditions(20, 10, 30, 80).low_weight);  // L <= 2m
}

TEST(Report, EveryLevelPasses) {
  for (int lv : cipher::kLevels) {
    const auto p = cipher::load_params(lv);
    for (int B : {kDefaultBudget, lv}) {
      const auto r = report(p, B);
      EXPECT_TRUE(r.passed()) << lv << " B=" << B;
      EXPECT_EQ(r.chi, 2 * lv - 1);
      EXPECT_EQ(r.nu, nlf::params::row(lv).nu);
      EXPECT_EQ(r.delta, nlf::params::row(lv).delta);
    }
  }
}

TEST(Report, Json) {
  const auto j = to_json(report(cipher::load_params(128)));
  EXPECT_EQ(j["level"], 128);
  EXPECT_EQ(j["B"], 64);
  EXPECT_EQ(j["alpha"]["degree"], 32);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["fsga"]["c"], 3);
}
