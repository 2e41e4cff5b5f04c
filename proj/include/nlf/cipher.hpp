#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nlf/bits.hpp"
#include "nlf/lfsr.hpp"
#include "nlf/mmfunc.hpp"

// The filter generator S(L,m).
//
// Register cells are addressed by their index i in u_{L-1} .. u_0 (see
// lfsr.hpp). posX/posY are kappa-bit strings whose index 0 is the leftmost
// character of the hex text. Keys and IVs are kappa-bit strings read the
// same way, so index q holds k_{kappa-1-q}.
namespace nlf::cipher {

inline constexpr int kLevels[] = {80, 128, 160, 192, 224, 256};

struct CipherParams {
  int kappa = 0;
  std::size_t L = 0;
  std::size_t m = 0;
  lfsr::ConnectionPoly poly;
  Bits posX;
  Bits posY;
  Bits dvec;  // bit i = d_i
  std::size_t mu = 0;

  // floor(sqrt(2 kappa))
  static std::size_t mu_for(int kappa);
};

struct TapLayout {
  int kappa = 0;
  std::size_t L = 0;
  std::vector<std::size_t> i;  // X offsets, i_1 = 0 < ... < i_m < kappa
  std::vector<std::size_t> j;  // Y offsets, kappa <= j_1 < ... < j_m
  std::size_t wtap = 0;        // L - 2 kappa

  std::size_t m() const { return i.size(); }
  // Register index feeding x_p / y_p (0-based p).
  std::size_t x_cell(std::size_t p) const { return L - 1 - i[p]; }
  std::size_t y_cell(std::size_t p) const { return L - 1 - j[p]; }
  // L-bit string with a 1 at every register cell read by the filter.
  Bits cells() const;
};

// Throws std::invalid_argument naming the first violated invariant.
void validate(const CipherParams& p);

CipherParams make_params(int kappa, std::size_t L, std::size_t m, lfsr::ConnectionPoly poly,
                         Bits posX, Bits posY, Bits dvec);

// Embedded parameter set for one of kLevels.
CipherParams load_params(int level);

TapLayout derive_taps(int kappa, std::size_t L, const Bits& posX, const Bits& posY);
TapLayout derive_taps(const CipherParams& p);
// Inverse of derive_taps for the two strings.
Bits encode_pos_x(const TapLayout& t);
Bits encode_pos_y(const TapLayout& t);

mm::FilterInput proj(const lfsr::LfsrState& s, const TapLayout& t);
bool filter_bit(const lfsr::LfsrState& s, const TapLayout& t);

// kappa/4 hex digits (either case) into a kappa-bit string.
Bits parse_key_hex(std::string_view hex, int kappa, const char* what = "key");

// Cells b_{L-2kappa-1}..b_0 of the initial state: b_k = 1 iff k is even.
Bits padding(std::size_t L, int kappa);
lfsr::LfsrState init_state(const Bits& key, const Bits& iv, const CipherParams& p);

lfsr::LfsrState ir_round(const CipherParams& p, const TapLayout& t, const lfsr::LfsrState& u);
lfsr::LfsrState ir_round_inverse(const CipherParams& p, const TapLayout& t,
                                 const lfsr::LfsrState& w);
lfsr::LfsrState ir_round(const CipherParams& p, const lfsr::LfsrState& u);
lfsr::LfsrState ir_round_inverse(const CipherParams& p, const lfsr::LfsrState& w);

// 2 kappa rounds of ir_round on init_state(key, iv).
lfsr::LfsrState initialize(const CipherParams& p, const Bits& key, const Bits& iv);

// Raised when a generator would pass 2^64 output bits.
class KeystreamCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class KeystreamGenerator {
 public:
  KeystreamGenerator(CipherParams p, const Bits& key, const Bits& iv);
  // Starts the keystream phase directly from `state`.
  static KeystreamGenerator from_state(CipherParams p, lfsr::LfsrState state);

  // z_t, z_{t+1}, ... at indices 0, 1, ...
  Bits generate(std::uint64_t nbits);
  // Packed MSB-first; a trailing partial byte is zero-padded.
  std::vector<std::uint8_t> generate_bytes(std::uint64_t nbits);
  bool next_bit();
  void skip(std::uint64_t nbits);

  std::uint64_t emitted() const { return emitted_; }
  bool exhausted() const { return exhausted_; }
  // Register contents s^(t) with t = emitted().
  lfsr::LfsrState state() const;
  const CipherParams& params() const { return params_; }
  bool uses_word_path() const { return word_path_; }

 private:
  KeystreamGenerator(CipherParams p, lfsr::LfsrState state, int);

  void reserve(std::uint64_t nbits);
  void refill();

  CipherParams params_;
  TapLayout taps_;
  bool word_path_;
  std::vector<int> low_taps_;            // i < L with c_i = 1
  std::vector<std::uint64_t> buf_;       // s_t .. s_{t+L-1} at bits 0..L-1 (word path)
  lfsr::LfsrState bitstate_;             // bit path
  std::uint64_t block_ = 0;              // pending output bits, next one in bit 0
  int avail_ = 0;
  std::vector<std::uint64_t> xs_, ys_;   // lane scratch
  std::uint64_t emitted_ = 0;
  bool exhausted_ = false;
};

// {level, L, m, poly, posX, posY, d}
nlohmann::json to_json(const CipherParams& p);

}  // namespace nlf::cipher
