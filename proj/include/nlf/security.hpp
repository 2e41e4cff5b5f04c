#pragma once

#include <cstddef>

#include <json.hpp>

#include "nlf/cipher.hpp"
#include "nlf/tapsearch.hpp"

// Closed-form attack margins. Logarithms are base 2 of exact big-integer
// quantities.
namespace nlf::security {

inline constexpr double kOmega = 2.8;  // linear-algebra exponent
inline constexpr int kDefaultBudget = 64;

double log2_binom(std::size_t L, std::size_t k);
// log2 of sum_{i=0}^{a} C(L, i)
double log2_binom_sum(std::size_t L, std::size_t a);

struct AlphaResult {
  std::size_t degree = 0;  // 2^floor(log2 m)
  double log2_alpha = 0;   // log2 C(L, degree)
  bool pass = false;       // log2_alpha > B
};

AlphaResult alpha(std::size_t L, std::size_t m, int B);

struct FcaConditions {
  bool low_weight = false;
  bool decode = false;
  bool filter_specific = false;

  bool all() const { return low_weight && decode && filter_specific; }
};

// Evaluated in exact integer arithmetic. With B = 2m the low-weight
// condition has no valid parity-check weight and counts as satisfied.
FcaConditions fca_conditions(std::size_t L, std::size_t m, int B, int kappa);

double beta(std::size_t L, std::size_t m);

struct GammaResult {
  double log2_gamma = 0;  // minimum over e of log2(S(e) S(d))
  std::size_t e = 0;      // minimiser
  std::size_t d = 0;
  double log2_d_sum = 0;  // log2 S(d) alone at the minimiser
};

// a = ceil(m/2), e in 1..a-1, d = a+1-e; throws if a < 2.
GammaResult gamma(std::size_t L, std::size_t m);

struct SecurityReport {
  int kappa = 0;
  int B = kDefaultBudget;
  AlphaResult alpha;
  FcaConditions fca;
  double log2_beta = 0;
  GammaResult gamma;
  taps::FsgaMargin fsga;
  int nu = 0;
  int delta = 0;
  int chi = 0;  // 2 kappa - 1
  bool filter_has_linear_w = true;
  bool register_covers_key_iv = false;  // L >= 2 kappa

  bool beta_pass() const { return log2_beta > kappa; }
  bool gamma_pass() const { return gamma.log2_gamma > kappa; }
  bool chi_pass() const { return chi > kappa; }
  bool passed() const;
};

SecurityReport report(const cipher::CipherParams& p, int B = kDefaultBudget);

nlohmann::json to_json(const SecurityReport& r);

}  // namespace nlf::security
