#include "nlf/gatecount.hpp"

#include <bit>
#include <stdexcept>

namespace nlf::gates {

namespace {

constexpr double kXor = 2.5;
constexpr double kAndOr = 1.5;
constexpr double kHalf = 5;
constexpr double kFull = 9;

std::size_t ceil_log2(std::size_t m) { return m <= 1 ? 0 : std::bit_width(m - 1); }

}  // namespace

AdderCount weight_adders(std::size_t m) {
  switch (m) {
    case 0: throw std::invalid_argument("weight_adders: m must be positive");
    case 1: return {0, 0, 1};
    case 2: return {0, 1, 2};
    case 3: return {1, 0, 2};
    default: break;
  }
  // m = m1 + m2 + 1 with m1 + 1 the largest power of two <= m; the extra bit
  // goes in as the carry of the final addition.
  const std::size_t m1 = std::bit_floor(m) - 1;
  const std::size_t m2 = m - m1 - 1;
  const AdderCount a = weight_adders(m1);
  const AdderCount b = m2 ? weight_adders(m2) : AdderCount{};
  return {a.full + b.full + b.width, a.half + b.half + (a.width - b.width), a.width + 1};
}

bool ThresholdCircuit::evaluate(std::uint64_t weight) const {
  auto bit = [](std::uint64_t v, std::size_t k) { return ((v >> k) & 1) != 0; };
  bool g = bit(threshold, 0) ? bit(weight, 0) : true;
  for (std::size_t k = 1; k < width; ++k) {
    g = bit(threshold, k) ? (bit(weight, k) && g) : (bit(weight, k) || g);
  }
  return g;
}

ThresholdCircuit threshold_circuit(std::size_t m) {
  if (m == 0) throw std::invalid_argument("threshold_circuit: m must be positive");
  ThresholdCircuit c;
  c.m = m;
  c.width = weight_adders(m).width;
  c.threshold = m / 2 + 1;
  for (std::size_t k = 1; k < c.width; ++k) {
    if ((c.threshold >> k) & 1) {
      ++c.and_gates;
    } else {
      ++c.or_gates;
    }
  }
  return c;
}

double filter_units(std::size_t m) {
  const AdderCount a = weight_adders(m);
  const auto md = static_cast<double>(m);
  return kAndOr * (md + static_cast<double>(ceil_log2(m))) + kXor * (md - 1) +
         kFull * static_cast<double>(a.full) + kHalf * static_cast<double>(a.half) + 2 * kXor;
}

GateEstimate cipher_units(const cipher::CipherParams& p, int flipflop) {
  if (flipflop != 8 && flipflop != 12) throw std::invalid_argument("flip-flop price must be 8 or 12");
  GateEstimate g;
  g.lfsr = flipflop * static_cast<double>(p.L);
  g.filter = filter_units(p.m);
  g.nb = kXor * static_cast<double>(p.poly.coeffs().popcount());
  g.ir = kXor * static_cast<double>(p.dvec.popcount());
  g.total = g.lfsr + g.filter + g.nb + g.ir;
  return g;
}

nlohmann::json to_json(const AdderCount& a) {
  return {{"full", a.full}, {"half", a.half}, {"width", a.width}};
}

nlohmann::json to_json(const GateEstimate& g) {
  return {{"lfsr", g.lfsr}, {"filter", g.filter}, {"nb", g.nb}, {"ir", g.ir}, {"total", g.total}};
}

}  // namespace nlf::gates
