#include "nlf/lfsr.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

#include "gf2_poly.hpp"

namespace nlf::lfsr {

namespace {

void require_length(const ConnectionPoly& p, const LfsrState& u) {
  if (u.size() != p.L()) {
    throw std::invalid_argument("state length " + std::to_string(u.size()) +
                                " does not match L=" + std::to_string(p.L()));
  }
}

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

ConnectionPoly::ConnectionPoly(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
  if (exponents_.empty() || exponents_.front() < 2) {
    throw std::invalid_argument("connection polynomial needs degree >= 2");
  }
  if (std::adjacent_find(exponents_.begin(), exponents_.end()) != exponents_.end()) {
    throw std::invalid_argument("repeated exponent in connection polynomial");
  }
  if (exponents_.back() != 0) {
    throw std::invalid_argument("connection polynomial must have constant term c_0 = 1");
  }
  L_ = static_cast<std::size_t>(exponents_.front());
  c_ = Bits(L_);
  for (std::size_t k = 1; k < exponents_.size(); ++k) c_.set(static_cast<std::size_t>(exponents_[k]));
}

ConnectionPoly ConnectionPoly::parse(std::string_view text) {
  std::vector<int> exps;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || text[i] == ' ') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw std::invalid_argument("malformed exponent list '" + std::string(text) + "'");
    }
    exps.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return ConnectionPoly(std::move(exps));
}

std::size_t ConnectionPoly::max_low_tap() const { return static_cast<std::size_t>(exponents_[1]); }

std::string ConnectionPoly::str() const {
  std::string s;
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(exponents_[k]);
  }
  return s;
}

bool nb(const ConnectionPoly& p, const LfsrState& u) {
  require_length(p, u);
  return u.parity_and(p.coeffs());
}

LfsrState next_state(const ConnectionPoly& p, const LfsrState& u) {
  const bool bit = nb(p, u);
  LfsrState w = u.shifted_down(1);
  w.set(p.L() - 1, bit);
  return w;
}

LfsrState prev_state(const ConnectionPoly& p, const LfsrState& w) {
  require_length(p, w);
  LfsrState u = w.shifted_up(1);
  // u_0 = w_{L-1} + sum_{i>=1} c_i u_i, using c_0 = 1.
  u.set(0, w.get(p.L() - 1) ^ u.parity_and(p.coeffs()));
  return u;
}

bool is_irreducible(const ConnectionPoly& p) {
  using detail::Gf2Poly;
  const Gf2Poly tau = Gf2Poly::from_exponents(p.exponents());
  const std::size_t L = p.L();
  const Gf2Poly x = Gf2Poly::monomial(1);

  // powers[k] = x^(2^k) mod tau for k = 0..L
  std::vector<Gf2Poly> powers{x.mod(tau)};
  for (std::size_t k = 1; k <= L; ++k) powers.push_back(powers.back().square().mod(tau));

  if (!(powers[L] == x.mod(tau))) return false;
  for (auto q : prime_factors(L)) {
    const Gf2Poly g = gcd(tau, powers[L / q] ^ x);
    if (g.degree() != 0) return false;
  }
  return true;
}

std::string to_binary(const LfsrState& u) { return u.reversed().to_binary(); }

LfsrState from_binary(std::string_view text) { return Bits::from_binary(text).reversed(); }

}  // namespace nlf::lfsr
