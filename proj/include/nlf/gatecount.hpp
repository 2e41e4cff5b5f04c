#pragma once

#include <cstddef>
#include <cstdint>

#include <json.hpp>

#include "nlf/cipher.hpp"

// NAND-unit circuit model: XOR 2.5, AND/OR 1.5, half adder 5, full adder 9,
// flip-flop 8 (or 12).
namespace nlf::gates {

struct AdderCount {
  std::size_t full = 0;
  std::size_t half = 0;
  std::size_t width = 0;  // bits of the resulting weight

  friend bool operator==(const AdderCount&, const AdderCount&) = default;
};

// Adder tree computing the Hamming weight of m bits.
AdderCount weight_adders(std::size_t m);

// Comparator "weight >= floor(m/2)+1" as a chain from the low weight bit up:
// the low bit is used as is (or is the constant 1 when the threshold's low
// bit is 0), then one AND per higher 1-bit of the threshold and one OR per
// higher 0-bit.
struct ThresholdCircuit {
  std::size_t m = 0;
  std::size_t width = 0;
  std::size_t threshold = 0;
  std::size_t or_gates = 0;
  std::size_t and_gates = 0;

  bool evaluate(std::uint64_t weight) const;
};

ThresholdCircuit threshold_circuit(std::size_t m);

double filter_units(std::size_t m);

struct GateEstimate {
  double lfsr = 0;
  double filter = 0;
  double nb = 0;
  double ir = 0;
  double total = 0;
};

GateEstimate cipher_units(const cipher::CipherParams& p, int flipflop = 8);

nlohmann::json to_json(const AdderCount& a);
nlohmann::json to_json(const GateEstimate& g);

}  // namespace nlf::gates
