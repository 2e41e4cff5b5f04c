#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nlf/bits.hpp"

// Truth-table Boolean functions on a handful of variables and the usual
// cryptographic metrics over them. Everything here is brute force and meant
// as the small-n oracle layer.
//
// Index convention: for an n-variable function, input x_1 is the most
// significant bit of the table index and x_n the least significant. ANF
// exponent vectors and Walsh frequencies use the same convention.
namespace nlf::boolfn {

inline constexpr int kMinVars = 2;
inline constexpr int kMaxVars = 16;
inline constexpr int kMaxAiVars = 14;
inline constexpr int kMaxFaiVars = 12;

// Value of variable x_k (1-based) in table index x.
constexpr bool input_bit(std::uint32_t x, int n, int k) { return (x >> (n - k)) & 1u; }

class BooleanFunction {
 public:
  BooleanFunction(int n, Bits table);

  static BooleanFunction from_evaluator(int n, const std::function<bool(std::uint32_t)>& eval);
  // Hex with the first digit holding table entries 0..3 (entry 0 in the high bit).
  static BooleanFunction from_hex(int n, std::string_view hex);
  static BooleanFunction constant(int n, bool value);

  int n() const { return n_; }
  std::size_t size() const { return table_.size(); }
  bool operator()(std::uint32_t x) const { return table_.get(x); }
  const Bits& table() const { return table_; }
  std::size_t weight() const { return table_.popcount(); }
  bool is_zero() const { return !table_.any(); }

  BooleanFunction complement() const;
  std::string to_hex() const { return table_.to_hex(); }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_;
  Bits table_;
};

struct AnfCoefficients {
  int n = 0;
  Bits coeffs;  // coeffs[alpha] = a_alpha

  friend bool operator==(const AnfCoefficients&, const AnfCoefficients&) = default;
};

struct WalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> values;

  std::int64_t max_abs() const;
};

// Exact p/q with q a power of two.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// In-place binary Moebius transform over the index lattice; an involution.
void moebius_transform(Bits& table);

AnfCoefficients anf(const BooleanFunction& f);
BooleanFunction truth_table(const AnfCoefficients& a);

// Maximum weight of an ANF monomial; 0 for the zero function.
int degree(const BooleanFunction& f);
int degree(const AnfCoefficients& a);

WalshSpectrum walsh(const BooleanFunction& f);

std::int64_t nonlinearity(const WalshSpectrum& w);
std::int64_t nonlinearity(const BooleanFunction& f);
Rational linear_bias(const WalshSpectrum& w);
Rational linear_bias(const BooleanFunction& f);
bool is_balanced(const BooleanFunction& f);

// Smallest degree of a nonzero annihilator of f or 1+f. Constant functions
// give 0. Requires n <= kMaxAiVars.
int algebraic_immunity(const BooleanFunction& f);

// min(2 AI, min over g with 1 <= deg g < AI of deg g + deg(fg)).
// Requires n <= kMaxFaiVars.
int fast_algebraic_immunity(const BooleanFunction& f);

// {n, table, anf, walsh, nl, lb, deg, ai, fai, balanced}; ai/fai are null when
// n exceeds the brute-force limits.
nlohmann::json report(const BooleanFunction& f);

}  // namespace nlf::boolfn
