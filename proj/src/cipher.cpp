#include "nlf/cipher.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "nlf/params.hpp"

namespace nlf::cipher {

namespace {

void fail(const std::string& what) { throw std::invalid_argument("invalid parameters: " + what); }

constexpr std::uint64_t low_mask(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

std::size_t CipherParams::mu_for(int kappa) {
  auto r = static_cast<std::size_t>(std::sqrt(2.0 * kappa));
  while (r * r > 2 * static_cast<std::size_t>(kappa)) --r;
  while ((r + 1) * (r + 1) <= 2 * static_cast<std::size_t>(kappa)) ++r;
  return r;
}

Bits TapLayout::cells() const {
  Bits c(L);
  c.set(wtap);
  for (std::size_t p = 0; p < m(); ++p) {
    c.set(x_cell(p));
    c.set(y_cell(p));
  }
  return c;
}

void validate(const CipherParams& p) {
  const auto k = static_cast<std::size_t>(p.kappa);
  if (p.kappa <= 0 || p.kappa % 4 != 0) fail("kappa must be a positive multiple of 4");
  if (p.L <= 2 * k) fail("L must exceed 2 kappa");
  if (p.m == 0 || 2 * p.m + 1 >= k) fail("need 1 <= m and 2m+1 < kappa");
  if (p.poly.L() != p.L) fail("polynomial degree differs from L");
  if (p.posX.size() != k || p.posY.size() != k) fail("posX/posY must have kappa bits");
  if (p.posX.popcount() != p.m) fail("wt(posX) != m");
  if (p.posY.popcount() != p.m) fail("wt(posY) != m");
  if (!p.posX.get(0)) fail("posX must start with 1 (i_1 = 0)");
  if (p.posY.get(k - 1)) fail("last posY bit must be 0 (j_m <= 2 kappa - 2)");
  if (p.dvec.size() != p.L) fail("dvec must have L bits");
  if (!p.dvec.get(p.L - 1)) fail("d_{L-1} must be 1");
  const Bits cells = derive_taps(p).cells();
  const Bits& c = p.poly.coeffs();
  for (std::size_t i = 0; i + 1 < p.L; ++i) {
    if (!p.dvec.get(i)) continue;
    if (i < p.L - 2 * k) fail("d_" + std::to_string(i) + " set below L - 2 kappa");
    if (c.get(i + 1)) fail("d_" + std::to_string(i) + " set under a feedback tap");
    if (cells.get(i + 1)) fail("d_" + std::to_string(i) + " set under a filter tap");
  }
}

CipherParams make_params(int kappa, std::size_t L, std::size_t m, lfsr::ConnectionPoly poly,
                         Bits posX, Bits posY, Bits dvec) {
  CipherParams p{kappa,           L,     m, std::move(poly), std::move(posX), std::move(posY),
                 std::move(dvec), CipherParams::mu_for(kappa)};
  validate(p);
  return p;
}

CipherParams load_params(int level) {
  const auto& r = params::row(level);
  const auto k = static_cast<std::size_t>(r.level);
  return make_params(r.level, r.L, r.m, lfsr::ConnectionPoly(r.poly), Bits::from_hex(r.posX, k),
                     Bits::from_hex(r.posY, k), Bits::from_positions(r.L, r.d));
}

TapLayout derive_taps(int kappa, std::size_t L, const Bits& posX, const Bits& posY) {
  const auto k = static_cast<std::size_t>(kappa);
  if (posX.size() != k || posY.size() != k) {
    throw std::invalid_argument("posX/posY must have kappa bits");
  }
  if (L < 2 * k) throw std::invalid_argument("L must be at least 2 kappa");
  TapLayout t;
  t.kappa = kappa;
  t.L = L;
  t.wtap = L - 2 * k;
  t.i = posX.ones();
  for (auto q : posY.ones()) t.j.push_back(k + q);
  if (t.i.size() != t.j.size()) {
    throw std::invalid_argument("posX and posY weights differ (" + std::to_string(t.i.size()) +
                                " vs " + std::to_string(t.j.size()) + ")");
  }
  if (t.i.empty() || t.i.front() != 0) throw std::invalid_argument("tap chain must start at i_1 = 0");
  if (t.j.back() > 2 * k - 2) throw std::invalid_argument("tap chain must end at j_m <= 2 kappa - 2");
  return t;
}

TapLayout derive_taps(const CipherParams& p) { return derive_taps(p.kappa, p.L, p.posX, p.posY); }

Bits encode_pos_x(const TapLayout& t) {
  Bits b(static_cast<std::size_t>(t.kappa));
  for (auto q : t.i) b.set(q);
  return b;
}

Bits encode_pos_y(const TapLayout& t) {
  Bits b(static_cast<std::size_t>(t.kappa));
  for (auto q : t.j) b.set(q - static_cast<std::size_t>(t.kappa));
  return b;
}

mm::FilterInput proj(const lfsr::LfsrState& s, const TapLayout& t) {
  if (s.size() != t.L) throw std::invalid_argument("state length does not match tap layout");
  mm::FilterInput in{s.get(t.wtap), Bits(t.m()), Bits(t.m())};
  for (std::size_t p = 0; p < t.m(); ++p) {
    in.x.set(p, s.get(t.x_cell(p)));
    in.y.set(p, s.get(t.y_cell(p)));
  }
  return in;
}

bool filter_bit(const lfsr::LfsrState& s, const TapLayout& t) {
  if (s.size() != t.L) throw std::invalid_argument("state length does not match tap layout");
  // Same value as f_eval(proj(s, t)) without materialising X and Y.
  const std::size_t m = t.m();
  std::size_t weight = 0;
  bool acc = !s.get(t.wtap);
  for (std::size_t p = 0; p < m; ++p) {
    const bool x = s.get(t.x_cell(p));
    weight += x;
    acc ^= x && s.get(t.y_cell(m - 1 - p));
  }
  return acc ^ (weight > m / 2);
}

Bits parse_key_hex(std::string_view hex, int kappa, const char* what) {
  const auto digits = static_cast<std::size_t>(kappa) / 4;
  if (hex.size() != digits) {
    throw std::invalid_argument(std::string(what) + " must be " + std::to_string(digits) +
                                " hex digits, got " + std::to_string(hex.size()));
  }
  return Bits::from_hex(hex, static_cast<std::size_t>(kappa));
}

Bits padding(std::size_t L, int kappa) {
  const std::size_t n = L - 2 * static_cast<std::size_t>(kappa);
  Bits b(n);
  for (std::size_t k = 0; k < n; k += 2) b.set(k);
  return b;
}

lfsr::LfsrState init_state(const Bits& key, const Bits& iv, const CipherParams& p) {
  const auto k = static_cast<std::size_t>(p.kappa);
  if (key.size() != k) throw std::invalid_argument("key must have kappa bits");
  if (iv.size() != k) throw std::invalid_argument("iv must have kappa bits");
  lfsr::LfsrState u(p.L);
  for (std::size_t q = 0; q < k; ++q) {
    u.set(p.L - 1 - q, key.get(q));
    u.set(p.L - 1 - k - q, iv.get(q));
  }
  const Bits pad = padding(p.L, p.kappa);
  for (std::size_t q = 0; q < pad.size(); ++q) u.set(q, pad.get(q));
  return u;
}

lfsr::LfsrState ir_round(const CipherParams& p, const TapLayout& t, const lfsr::LfsrState& u) {
  const bool b = filter_bit(u, t);
  lfsr::LfsrState w = lfsr::next_state(p.poly, u);
  if (b) w ^= p.dvec;
  return w;
}

lfsr::LfsrState ir_round_inverse(const CipherParams& p, const TapLayout& t,
                                 const lfsr::LfsrState& w) {
  if (w.size() != p.L) throw std::invalid_argument("state length does not match L");
  // Every cell read by the filter or by nb sits above a zero of d, so the
  // shifted w already agrees with u there.
  lfsr::LfsrState u = w.shifted_up(1);
  const bool b = filter_bit(u, t);
  if (b) u ^= p.dvec.shifted_up(1);
  u.set(0, w.get(p.L - 1) ^ b ^ u.parity_and(p.poly.coeffs()));
  return u;
}

lfsr::LfsrState ir_round(const CipherParams& p, const lfsr::LfsrState& u) {
  return ir_round(p, derive_taps(p), u);
}

lfsr::LfsrState ir_round_inverse(const CipherParams& p, const lfsr::LfsrState& w) {
  return ir_round_inverse(p, derive_taps(p), w);
}

lfsr::LfsrState initialize(const CipherParams& p, const Bits& key, const Bits& iv) {
  const TapLayout t = derive_taps(p);
  lfsr::LfsrState s = init_state(key, iv, p);
  for (int r = 0; r < 2 * p.kappa; ++r) s = ir_round(p, t, s);
  return s;
}

KeystreamGenerator::KeystreamGenerator(CipherParams p, const Bits& key, const Bits& iv)
    : KeystreamGenerator(p, initialize(p, key, iv), 0) {}

KeystreamGenerator KeystreamGenerator::from_state(CipherParams p, lfsr::LfsrState state) {
  if (state.size() != p.L) throw std::invalid_argument("state length does not match L");
  return KeystreamGenerator(std::move(p), std::move(state), 0);
}

KeystreamGenerator::KeystreamGenerator(CipherParams p, lfsr::LfsrState state, int)
    : params_(std::move(p)), taps_(derive_taps(params_)) {
  const std::size_t L = params_.L;
  word_path_ = params_.poly.max_low_tap() + 64 <= L;
  if (word_path_) {
    for (auto i : params_.poly.coeffs().ones()) low_taps_.push_back(static_cast<int>(i));
    buf_.assign(word_count(L + 64) + 1, 0);
    const auto w = state.words();
    std::copy(w.begin(), w.end(), buf_.begin());
    xs_.resize(taps_.m());
    ys_.resize(taps_.m());
  } else {
    bitstate_ = std::move(state);
  }
}

void KeystreamGenerator::refill() {
  const std::size_t L = params_.L;
  auto extract = [this](std::size_t off) {
    const std::size_t w = off / 64, b = off % 64;
    std::uint64_t v = buf_[w] >> b;
    if (b != 0) v |= buf_[w + 1] << (64 - b);
    return v;
  };
  // s_{t+L+k} for k = 0..63; every source index stays below t+L.
  std::uint64_t next = 0;
  for (int i : low_taps_) next ^= extract(static_cast<std::size_t>(i));
  const std::size_t off = L / 64, sh = L % 64;
  buf_[off] = (buf_[off] & low_mask(static_cast<unsigned>(sh))) | (next << sh);
  buf_[off + 1] = sh != 0 ? next >> (64 - sh) : 0;

  for (std::size_t p = 0; p < taps_.m(); ++p) {
    xs_[p] = extract(taps_.x_cell(p));
    ys_[p] = extract(taps_.y_cell(p));
  }
  block_ = mm::f_eval_lanes(extract(taps_.wtap), xs_, ys_);
  avail_ = 64;

  std::memmove(buf_.data(), buf_.data() + 1, (buf_.size() - 1) * sizeof(std::uint64_t));
  buf_.back() = 0;
  // Keep only s_{t+64} .. s_{t+63+L}.
  buf_[off] &= low_mask(static_cast<unsigned>(sh));
  for (std::size_t w = off + 1; w < buf_.size(); ++w) buf_[w] = 0;
}

void KeystreamGenerator::reserve(std::uint64_t nbits) {
  if (nbits == 0) return;
  // Remaining budget is 2^64 - emitted_; it wraps to 0 exactly when emitted_ is 0.
  const std::uint64_t room = exhausted_ ? 0 : std::uint64_t{0} - emitted_;
  const bool fits = !exhausted_ && (emitted_ == 0 || nbits <= room);
  if (!fits) {
    throw KeystreamCapExceeded("at most 2^64 keystream bits per generator; " +
                               std::to_string(nbits) + " more requested after " +
                               (exhausted_ ? std::string("2^64") : std::to_string(emitted_)));
  }
  emitted_ += nbits;
  if (emitted_ == 0) exhausted_ = true;
}

bool KeystreamGenerator::next_bit() {
  reserve(1);
  if (!word_path_) {
    const bool z = filter_bit(bitstate_, taps_);
    bitstate_ = lfsr::next_state(params_.poly, bitstate_);
    return z;
  }
  if (avail_ == 0) refill();
  const bool z = block_ & 1;
  block_ >>= 1;
  --avail_;
  return z;
}

Bits KeystreamGenerator::generate(std::uint64_t nbits) {
  reserve(nbits);
  Bits out(static_cast<std::size_t>(nbits));
  if (!word_path_) {
    for (std::size_t t = 0; t < out.size(); ++t) {
      out.set(t, filter_bit(bitstate_, taps_));
      bitstate_ = lfsr::next_state(params_.poly, bitstate_);
    }
    return out;
  }
  auto words = out.words();
  std::size_t pos = 0;
  while (pos < out.size()) {
    if (avail_ == 0) refill();
    const std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(avail_), out.size() - pos);
    const std::uint64_t chunk = block_ & low_mask(static_cast<unsigned>(take));
    const std::size_t w = pos / 64, b = pos % 64;
    words[w] |= chunk << b;
    if (b != 0 && b + take > 64) words[w + 1] |= chunk >> (64 - b);
    block_ = take == 64 ? 0 : block_ >> take;
    avail_ -= static_cast<int>(take);
    pos += take;
  }
  return out;
}

std::vector<std::uint8_t> KeystreamGenerator::generate_bytes(std::uint64_t nbits) {
  const Bits z = generate(nbits);
  std::vector<std::uint8_t> out((z.size() + 7) / 8, 0);
  for (std::size_t t = 0; t < z.size(); ++t) {
    if (z.get(t)) out[t / 8] |= static_cast<std::uint8_t>(0x80u >> (t % 8));
  }
  return out;
}

void KeystreamGenerator::skip(std::uint64_t nbits) {
  constexpr std::uint64_t kChunk = std::uint64_t{1} << 20;
  while (nbits > 0) {
    const auto n = std::min(nbits, kChunk);
    generate(n);
    nbits -= n;
  }
}

lfsr::LfsrState KeystreamGenerator::state() const {
  if (!word_path_) return bitstate_;
  lfsr::LfsrState s(params_.L);
  auto w = s.words();
  std::copy(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(w.size()), w.begin());
  s.trim();
  // buf_ runs avail_ clocks ahead of the caller's position.
  for (int k = 0; k < avail_; ++k) s = lfsr::prev_state(params_.poly, s);
  return s;
}

nlohmann::json to_json(const CipherParams& p) {
  nlohmann::json j;
  j["level"] = p.kappa;
  j["L"] = p.L;
  j["m"] = p.m;
  j["poly"] = p.poly.exponents();
  j["posX"] = p.posX.to_hex();
  j["posY"] = p.posY.to_hex();
  j["d"] = p.dvec.ones();
  return j;
}

}  // namespace nlf::cipher
