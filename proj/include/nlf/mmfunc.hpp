#pragma once

#include <cstdint>
#include <span>

#include "nlf/bits.hpp"
#include "nlf/boolfn.hpp"

// The filter family: majority, reversal, the Maiorana-McFarland function
// <rev(X),Y> + Maj(X) and the filter 1 + W + MM(X,Y).
//
// Sequences are 0-based: x.get(p-1) is x_p.
namespace nlf::mm {

struct FilterInput {
  bool w = false;
  Bits x;
  Bits y;

  std::size_t m() const { return x.size(); }
};

// 1 iff wt(x) > floor(m/2).
bool maj(const Bits& x);
Bits rev(const Bits& x);
// sum_p x_p y_{m+1-p}
bool inner_rev(const Bits& x, const Bits& y);
bool mm_even(const Bits& x, const Bits& y);
bool f_eval(const FilterInput& in);

// Truth table of MM_n for 4 <= n <= 16. Variable order is X_1..X_m,Y_1..Y_m
// for even n and W,X_1..X_m,Y_1..Y_m for odd n (W + MM_{n-1}).
boolfn::BooleanFunction small_instance(int n);

// Bitsliced evaluation over 64 independent lanes: x[p], y[p] hold x_{p+1},
// y_{p+1} for every lane.
std::uint64_t maj_lanes(std::span<const std::uint64_t> x);
std::uint64_t f_eval_lanes(std::uint64_t w, std::span<const std::uint64_t> x,
                           std::span<const std::uint64_t> y);

}  // namespace nlf::mm
