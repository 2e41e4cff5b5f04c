#pragma once

#include <cstdint>
#include <random>

#include <json.hpp>

#include "nlf/bits.hpp"
#include "nlf/cipher.hpp"

// Shift-overlap metrics of tap strings and the randomized search that
// minimises them.
namespace nlf::taps {

// All 2m+1 filter taps as an L-bit string over register cells (bit i = u_i).
struct PosVector {
  int kappa = 0;
  std::size_t L = 0;
  Bits cells;

  static PosVector from_layout(const cipher::TapLayout& t);
  static PosVector from_strings(int kappa, std::size_t L, const Bits& posX, const Bits& posY);

  cipher::TapLayout layout() const;
  Bits pos_x() const;
  Bits pos_y() const;
};

// max over 1 <= t < len of wt(s & (s >> t)).
int max_shift_overlap(const Bits& s, std::size_t tmax_exclusive);
// Over shifts 1..kappa-1 of the kappa-bit posX.
int nu_of(const Bits& posX);
// Over shifts 1..2kappa-1 of the full pos string.
int delta_of(const PosVector& pos);

// Uniform draw in [0, n) by rejection; n > 0.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// i_1 = 0 plus m-1 offsets from {1..kappa-1}; j_m = 2kappa-2 plus m-1 offsets
// from {kappa..2kappa-3}.
PosVector random_pos(int kappa, std::size_t L, std::size_t m, std::mt19937_64& rng);

struct SearchResult {
  PosVector pos;
  int nu = 0;
  int delta = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t best_trial = 0;
};

// Seed of the generator used for trial `trial` (splitmix64 of seed and index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// Lowest nu over `trials` candidates, earliest trial on ties. The result does
// not depend on `threads` (0 = hardware concurrency).
SearchResult search(int kappa, std::size_t L, std::size_t m, std::uint64_t trials,
                    std::uint64_t seed, unsigned threads = 0);

// True iff the sets {L+t-1-i_p, L+t-1-j_{m+1-p}} for 0 <= t <= tmax and all p
// are pairwise distinct.
bool qterm_distinct(const cipher::TapLayout& t, std::size_t L, std::size_t tmax);

struct FsgaMargin {
  std::size_t c = 0;  // least c with n c >= L
  double log2_complexity = 0;
  bool pass = false;
  double log2_complexity_c2 = 0;  // same formula at c = 2
  bool pass_c2 = false;
};

FsgaMargin fsga_margin(std::size_t n, std::size_t L, int delta, int kappa);

nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const FsgaMargin& f);

}  // namespace nlf::taps
