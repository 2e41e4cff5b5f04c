#include "gf2_poly.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace nlf::detail {

namespace {

// Spread the 32 bits of v to the even positions of a 64-bit word.
std::uint64_t spread(std::uint32_t v) {
  std::uint64_t x = v;
  x = (x | (x << 16)) & 0x0000ffff0000ffffull;
  x = (x | (x << 8)) & 0x00ff00ff00ff00ffull;
  x = (x | (x << 4)) & 0x0f0f0f0f0f0f0f0full;
  x = (x | (x << 2)) & 0x3333333333333333ull;
  x = (x | (x << 1)) & 0x5555555555555555ull;
  return x;
}

}  // namespace

Gf2Poly Gf2Poly::monomial(std::size_t k) {
  Gf2Poly p;
  p.w_.assign(k / 64 + 1, 0);
  p.w_[k / 64] = std::uint64_t{1} << (k % 64);
  return p;
}

Gf2Poly Gf2Poly::from_exponents(const std::vector<int>& exps) {
  Gf2Poly p;
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    p ^= monomial(static_cast<std::size_t>(e));
  }
  return p;
}

long Gf2Poly::degree() const {
  for (std::size_t i = w_.size(); i-- > 0;) {
    if (w_[i]) return static_cast<long>(i * 64 + 63 - std::countl_zero(w_[i]));
  }
  return -1;
}

bool Gf2Poly::coeff(std::size_t i) const {
  return i / 64 < w_.size() && ((w_[i / 64] >> (i % 64)) & 1);
}

Gf2Poly& Gf2Poly::operator^=(const Gf2Poly& o) {
  if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
  for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
  normalize();
  return *this;
}

bool Gf2Poly::operator==(const Gf2Poly& o) const {
  Gf2Poly a = *this, b = o;
  a.normalize();
  b.normalize();
  return a.w_ == b.w_;
}

Gf2Poly Gf2Poly::square() const {
  Gf2Poly r;
  r.w_.assign(2 * w_.size(), 0);
  for (std::size_t i = 0; i < w_.size(); ++i) {
    r.w_[2 * i] = spread(static_cast<std::uint32_t>(w_[i]));
    r.w_[2 * i + 1] = spread(static_cast<std::uint32_t>(w_[i] >> 32));
  }
  r.normalize();
  return r;
}

Gf2Poly Gf2Poly::mod(const Gf2Poly& m) const {
  const long dm = m.degree();
  if (dm < 0) throw std::domain_error("polynomial reduction modulo zero");
  Gf2Poly r = *this;
  for (long d = r.degree(); d >= dm; d = r.degree()) {
    r.xor_shifted(m, static_cast<std::size_t>(d - dm));
  }
  return r;
}

void Gf2Poly::xor_shifted(const Gf2Poly& o, std::size_t shift) {
  const std::size_t ws = shift / 64, bs = shift % 64;
  const std::size_t need = o.w_.size() + ws + 1;
  if (w_.size() < need) w_.resize(need, 0);
  for (std::size_t i = 0; i < o.w_.size(); ++i) {
    w_[i + ws] ^= o.w_[i] << bs;
    if (bs != 0) w_[i + ws + 1] ^= o.w_[i] >> (64 - bs);
  }
  normalize();
}

void Gf2Poly::normalize() {
  while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace nlf::detail
