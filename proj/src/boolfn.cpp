#include "nlf/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

#include "gf2_matrix.hpp"

namespace nlf::boolfn {

namespace {

void require_vars(int n, int limit, const char* what) {
  if (n < kMinVars || n > limit) {
    throw std::invalid_argument(std::string(what) + ": n=" + std::to_string(n) +
                                " outside supported range " + std::to_string(kMinVars) + ".." +
                                std::to_string(limit));
  }
}

// Exponent vectors of weight <= d, ascending.
std::vector<std::uint32_t> monomials_up_to(int n, int d) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    if (std::popcount(a) <= d) out.push_back(a);
  }
  return out;
}

// True iff some nonzero polynomial of degree <= d vanishes on every point.
bool has_annihilator(int n, const std::vector<std::uint32_t>& points, int d) {
  if (points.empty()) return true;
  const auto mons = monomials_up_to(n, d);
  if (mons.size() > points.size()) return true;
  detail::Gf2Matrix m(points.size());
  for (auto beta : mons) {
    Bits row(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
      if ((points[k] & beta) == beta) row.set(k);
    }
    m.add_row(std::move(row));
  }
  return m.rank() < mons.size();
}

std::vector<std::uint32_t> support(const BooleanFunction& f, bool value) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (f(x) == value) out.push_back(x);
  }
  return out;
}

}  // namespace

BooleanFunction::BooleanFunction(int n, Bits table) : n_(n), table_(std::move(table)) {
  require_vars(n, kMaxVars, "BooleanFunction");
  if (table_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("truth table length " + std::to_string(table_.size()) +
                                " is not 2^" + std::to_string(n));
  }
}

BooleanFunction BooleanFunction::from_evaluator(int n,
                                                const std::function<bool(std::uint32_t)>& eval) {
  require_vars(n, kMaxVars, "from_evaluator");
  Bits t(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < t.size(); ++x) {
    if (eval(x)) t.set(x);
  }
  return BooleanFunction(n, std::move(t));
}

BooleanFunction BooleanFunction::from_hex(int n, std::string_view hex) {
  require_vars(n, kMaxVars, "from_hex");
  return BooleanFunction(n, Bits::from_hex(hex, std::size_t{1} << n));
}

BooleanFunction BooleanFunction::constant(int n, bool value) {
  return from_evaluator(n, [value](std::uint32_t) { return value; });
}

BooleanFunction BooleanFunction::complement() const {
  Bits t = table_;
  for (auto& w : t.words()) w = ~w;
  t.trim();
  return BooleanFunction(n_, std::move(t));
}

std::int64_t WalshSpectrum::max_abs() const {
  std::int64_t best = 0;
  for (auto v : values) best = std::max(best, std::abs(v));
  return best;
}

void moebius_transform(Bits& table) {
  static constexpr std::uint64_t kLow[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
  };
  const std::size_t size = table.size();
  if (size == 0 || !std::has_single_bit(size)) {
    throw std::invalid_argument("Moebius transform needs a power-of-two length");
  }
  const int n = std::countr_zero(size);
  auto w = table.words();
  for (int k = 0; k < std::min(n, 6); ++k) {
    const int s = 1 << k;
    for (auto& word : w) word ^= (word & kLow[k]) << s;
  }
  for (int k = 6; k < n; ++k) {
    const std::size_t stride = std::size_t{1} << (k - 6);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j & stride) w[j] ^= w[j ^ stride];
    }
  }
}

AnfCoefficients anf(const BooleanFunction& f) {
  Bits c = f.table();
  moebius_transform(c);
  return {f.n(), std::move(c)};
}

BooleanFunction truth_table(const AnfCoefficients& a) {
  Bits t = a.coeffs;
  moebius_transform(t);
  return BooleanFunction(a.n, std::move(t));
}

int degree(const AnfCoefficients& a) {
  int d = 0;
  for (auto alpha : a.coeffs.ones()) d = std::max(d, std::popcount(alpha));
  return d;
}

int degree(const BooleanFunction& f) { return degree(anf(f)); }

WalshSpectrum walsh(const BooleanFunction& f) {
  WalshSpectrum w{f.n(), std::vector<std::int64_t>(f.size())};
  auto& v = w.values;
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = f(static_cast<std::uint32_t>(x)) ? -1 : 1;
  for (std::size_t h = 1; h < v.size(); h <<= 1) {
    for (std::size_t i = 0; i < v.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const auto a = v[j], b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
  return w;
}

std::int64_t nonlinearity(const WalshSpectrum& w) {
  return (std::int64_t{1} << (w.n - 1)) - w.max_abs() / 2;
}

std::int64_t nonlinearity(const BooleanFunction& f) { return nonlinearity(walsh(f)); }

Rational linear_bias(const WalshSpectrum& w) {
  // 1/2 - nl/2^n = max|W| / 2^(n+1), reduced.
  Rational r{w.max_abs(), std::int64_t{1} << (w.n + 1)};
  if (r.num == 0) return {0, 1};
  while (r.num % 2 == 0) {
    r.num /= 2;
    r.den /= 2;
  }
  return r;
}

Rational linear_bias(const BooleanFunction& f) { return linear_bias(walsh(f)); }

bool is_balanced(const BooleanFunction& f) { return 2 * f.weight() == f.size(); }

int algebraic_immunity(const BooleanFunction& f) {
  require_vars(f.n(), kMaxAiVars, "algebraic_immunity");
  const auto on = support(f, true);
  const auto off = support(f, false);
  if (on.empty() || off.empty()) return 0;
  for (int d = 1; d <= f.n(); ++d) {
    if (has_annihilator(f.n(), on, d) || has_annihilator(f.n(), off, d)) return d;
  }
  return f.n();
}

int fast_algebraic_immunity(const BooleanFunction& f) {
  require_vars(f.n(), kMaxFaiVars, "fast_algebraic_immunity");
  const int n = f.n();
  const int ai = algebraic_immunity(f);
  if (ai <= 1) return 2 * ai;

  // Column for g = X^beta: ANF of f * X^beta. Unknowns are the coefficients
  // of g on monomials of weight <= e; the constraints ask the product to have
  // no monomial of weight > d.
  const auto betas = monomials_up_to(n, ai - 1);
  std::vector<Bits> product_anf;
  product_anf.reserve(betas.size());
  for (auto beta : betas) {
    Bits t(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      if (f(x) && (x & beta) == beta) t.set(x);
    }
    moebius_transform(t);
    product_anf.push_back(std::move(t));
  }

  auto feasible = [&](int e, int d) {
    std::vector<std::uint32_t> high;
    for (std::uint32_t a = 0; a < f.size(); ++a) {
      if (std::popcount(a) > d) high.push_back(a);
    }
    std::size_t unknowns = 0;
    detail::Gf2Matrix m(high.size());
    std::vector<Bits> rows;
    for (std::size_t k = 0; k < betas.size(); ++k) {
      if (std::popcount(betas[k]) > e) continue;
      Bits row(high.size());
      for (std::size_t h = 0; h < high.size(); ++h) {
        if (product_anf[k].get(high[h])) row.set(h);
      }
      rows.push_back(row);
      m.add_row(std::move(row));
      ++unknowns;
    }
    const std::size_t kernel = unknowns - m.rank();
    if (kernel >= 2) return true;
    if (kernel == 0) return false;
    // A one-dimensional kernel might be {0, 1}; g = 1 has degree 0 and does
    // not count. betas[0] is the constant monomial, so the sole kernel vector
    // is the constant iff the constant column alone is already zero.
    return rows.front().any();
  };

  for (int s = ai + 1; s <= 2 * ai - 1; ++s) {
    for (int e = 1; e <= ai - 1; ++e) {
      const int d = s - e;
      if (d < ai || d > n) continue;
      if (feasible(e, d)) return s;
    }
  }
  return 2 * ai;
}

nlohmann::json report(const BooleanFunction& f) {
  const auto w = walsh(f);
  nlohmann::json j;
  j["n"] = f.n();
  j["table"] = f.to_hex();
  j["anf"] = anf(f).coeffs.to_hex();
  j["walsh"] = w.values;
  j["nl"] = nonlinearity(w);
  j["lb"] = linear_bias(w).str();
  j["deg"] = degree(f);
  j["ai"] = f.n() <= kMaxAiVars ? nlohmann::json(algebraic_immunity(f)) : nlohmann::json();
  j["fai"] = f.n() <= kMaxFaiVars ? nlohmann::json(fast_algebraic_immunity(f)) : nlohmann::json();
  j["balanced"] = is_balanced(f);
  return j;
}

}  // namespace nlf::boolfn
