#pragma once

#include <cstdint>
#include <vector>

namespace nlf::detail {

// Dense polynomial over GF(2); bit i of the word vector is the x^i coefficient.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  static Gf2Poly monomial(std::size_t k);
  static Gf2Poly from_exponents(const std::vector<int>& exps);

  // -1 for the zero polynomial.
  long degree() const;
  bool is_zero() const { return degree() < 0; }
  bool coeff(std::size_t i) const;

  Gf2Poly& operator^=(const Gf2Poly& o);
  friend Gf2Poly operator^(Gf2Poly a, const Gf2Poly& b) { return a ^= b; }
  bool operator==(const Gf2Poly& o) const;

  Gf2Poly square() const;
  Gf2Poly mod(const Gf2Poly& m) const;

 private:
  void xor_shifted(const Gf2Poly& o, std::size_t shift);
  void normalize();

  std::vector<std::uint64_t> w_;
};

Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

}  // namespace nlf::detail
