#include "nlf/mmfunc.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace nlf::mm {

bool maj(const Bits& x) {
  if (x.empty()) throw std::invalid_argument("majority of an empty sequence");
  return x.popcount() > x.size() / 2;
}

Bits rev(const Bits& x) { return x.reversed(); }

bool inner_rev(const Bits& x, const Bits& y) {
  if (x.size() != y.size()) throw std::invalid_argument("X and Y lengths differ");
  return x.reversed().parity_and(y);
}

bool mm_even(const Bits& x, const Bits& y) { return inner_rev(x, y) ^ maj(x); }

bool f_eval(const FilterInput& in) { return !(in.w ^ mm_even(in.x, in.y)); }

boolfn::BooleanFunction small_instance(int n) {
  if (n < 4 || n > 16) {
    throw std::invalid_argument("small_instance: n=" + std::to_string(n) + " outside 4..16");
  }
  const int m = n / 2;
  const bool odd = n % 2 == 1;
  return boolfn::BooleanFunction::from_evaluator(n, [=](std::uint32_t idx) {
    Bits x(m), y(m);
    for (int p = 1; p <= m; ++p) {
      x.set(p - 1, boolfn::input_bit(idx, n, (odd ? 1 : 0) + p));
      y.set(p - 1, boolfn::input_bit(idx, n, (odd ? 1 : 0) + m + p));
    }
    const bool w = odd && boolfn::input_bit(idx, n, 1);
    return w ^ mm_even(x, y);
  });
}

std::uint64_t maj_lanes(std::span<const std::uint64_t> x) {
  const std::size_t m = x.size();
  if (m == 0) throw std::invalid_argument("majority of an empty sequence");
  // Per-lane counter, bit k of the count in count[k].
  std::array<std::uint64_t, 16> count{};
  const int width = std::bit_width(m);
  for (auto v : x) {
    std::uint64_t carry = v;
    for (int k = 0; k < width && carry; ++k) {
      const std::uint64_t t = count[k] & carry;
      count[k] ^= carry;
      carry = t;
    }
  }
  // count >= floor(m/2)+1, compared from the top bit down.
  const std::size_t threshold = m / 2 + 1;
  std::uint64_t gt = 0, eq = ~std::uint64_t{0};
  for (int k = width - 1; k >= 0; --k) {
    const std::uint64_t kbit = ((threshold >> k) & 1) ? ~std::uint64_t{0} : 0;
    gt |= eq & count[k] & ~kbit;
    eq &= ~(count[k] ^ kbit);
  }
  return gt | eq;
}

std::uint64_t f_eval_lanes(std::uint64_t w, std::span<const std::uint64_t> x,
                           std::span<const std::uint64_t> y) {
  if (x.size() != y.size()) throw std::invalid_argument("X and Y lengths differ");
  const std::size_t m = x.size();
  std::uint64_t acc = ~w ^ maj_lanes(x);
  for (std::size_t p = 0; p < m; ++p) acc ^= x[p] & y[m - 1 - p];
  return acc;
}

}  // namespace nlf::mm
