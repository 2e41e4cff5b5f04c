#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nlf/bits.hpp"

// Fibonacci-style register u_{L-1} .. u_0. The new bit
// nb(u) = c_{L-1}u_{L-1} + ... + c_0u_0 enters at u_{L-1} and u_0 drops out.
namespace nlf::lfsr {

// Register contents with u_i stored at bit i; "leftmost" is bit L-1.
using LfsrState = Bits;

class ConnectionPoly {
 public:
  // Exponents of tau(x) = x^L + ... ; the largest is L and 0 must be present.
  explicit ConnectionPoly(std::vector<int> exponents);
  // "163,7,6,3,0" (commas and/or spaces).
  static ConnectionPoly parse(std::string_view text);

  std::size_t L() const { return L_; }
  // c_i for i < L, bit i.
  const Bits& coeffs() const { return c_; }
  const std::vector<int>& exponents() const { return exponents_; }
  // Largest i < L with c_i = 1.
  std::size_t max_low_tap() const;
  std::string str() const;

  friend bool operator==(const ConnectionPoly&, const ConnectionPoly&) = default;

 private:
  std::size_t L_ = 0;
  Bits c_;
  std::vector<int> exponents_;  // descending
};

bool nb(const ConnectionPoly& p, const LfsrState& u);
LfsrState next_state(const ConnectionPoly& p, const LfsrState& u);
LfsrState prev_state(const ConnectionPoly& p, const LfsrState& w);

// Rabin's test: x^(2^L) = x mod tau and gcd(x^(2^(L/q)) - x, tau) = 1 for
// every prime q dividing L.
bool is_irreducible(const ConnectionPoly& p);

// "u_{L-1}...u_0" as 0/1 text.
std::string to_binary(const LfsrState& u);
LfsrState from_binary(std::string_view text);

}  // namespace nlf::lfsr
