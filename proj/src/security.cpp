#include "nlf/security.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace nlf::security {

namespace {

using boost::multiprecision::cpp_int;

double log2_exact(const cpp_int& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::size_t top = boost::multiprecision::msb(x);
  if (top < 53) return std::log2(x.convert_to<double>());
  const std::size_t shift = top - 52;
  const cpp_int head = x >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

cpp_int binom(std::size_t L, std::size_t k) {
  if (k > L) return 0;
  cpp_int c = 1;
  for (std::size_t i = 0; i < k; ++i) {
    c *= L - i;
    c /= i + 1;
  }
  return c;
}

// S(a) for a = 0..amax
std::vector<cpp_int> partial_sums(std::size_t L, std::size_t amax) {
  std::vector<cpp_int> s;
  cpp_int c = 1, acc = 0;
  for (std::size_t i = 0; i <= amax; ++i) {
    if (i > 0) {
      if (i > L) {
        c = 0;
      } else {
        c *= L - i + 1;
        c /= i;
      }
    }
    acc += c;
    s.push_back(acc);
  }
  return s;
}

}  // namespace

double log2_binom(std::size_t L, std::size_t k) { return log2_exact(binom(L, k)); }

double log2_binom_sum(std::size_t L, std::size_t a) {
  if (a > L) throw std::invalid_argument("log2_binom_sum: need a <= L");
  return log2_exact(partial_sums(L, a).back());
}

AlphaResult alpha(std::size_t L, std::size_t m, int B) {
  if (m == 0) throw std::invalid_argument("alpha: m must be positive");
  AlphaResult r;
  r.degree = std::bit_floor(m);
  r.log2_alpha = log2_binom(L, r.degree);
  r.pass = r.log2_alpha > B;
  return r;
}

FcaConditions fca_conditions(std::size_t L, std::size_t m, int B, int kappa) {
  const auto l = static_cast<long long>(L), mm = static_cast<long long>(m);
  const long long b = B, k = kappa;
  FcaConditions c;
  if (l > 2 * mm) {
    if (b <= 2 * mm) {
      c.low_weight = true;
    } else {
      c.low_weight = k * (b - 2 * mm) < 2 * mm * l + b * (b - 4 * mm);
    }
  }
  c.decode = b <= 2 * (2 * mm + 3);
  c.filter_specific = 2 * b < k + 4 * mm;
  return c;
}

double beta(std::size_t L, std::size_t m) { return kOmega * log2_binom_sum(L, (m + 1) / 2); }

GammaResult gamma(std::size_t L, std::size_t m) {
  const std::size_t a = (m + 1) / 2;
  if (a < 2) throw std::invalid_argument("gamma: needs ceil(m/2) >= 2");
  const auto s = partial_sums(L, a);
  GammaResult best;
  cpp_int best_product = -1;
  for (std::size_t e = 1; e <= a - 1; ++e) {
    const std::size_t d = a + 1 - e;
    const cpp_int prod = s[e] * s[d];
    if (best_product < 0 || prod < best_product) {
      best_product = prod;
      best.e = e;
      best.d = d;
    }
  }
  best.log2_gamma = log2_exact(best_product);
  best.log2_d_sum = log2_exact(s[best.d]);
  return best;
}

bool SecurityReport::passed() const {
  return alpha.pass && fca.all() && beta_pass() && gamma_pass() && fsga.pass && chi_pass() &&
         filter_has_linear_w && register_covers_key_iv;
}

SecurityReport report(const cipher::CipherParams& p, int B) {
  SecurityReport r;
  r.kappa = p.kappa;
  r.B = B;
  r.alpha = alpha(p.L, p.m, B);
  r.fca = fca_conditions(p.L, p.m, B, p.kappa);
  r.log2_beta = beta(p.L, p.m);
  r.gamma = gamma(p.L, p.m);
  const auto pos = taps::PosVector::from_layout(cipher::derive_taps(p));
  r.nu = taps::nu_of(p.posX);
  r.delta = taps::delta_of(pos);
  r.fsga = taps::fsga_margin(2 * p.m + 1, p.L, r.delta, p.kappa);
  r.chi = 2 * p.kappa - 1;
  r.register_covers_key_iv = p.L >= 2 * static_cast<std::size_t>(p.kappa);
  return r;
}

nlohmann::json to_json(const SecurityReport& r) {
  return {
      {"level", r.kappa},
      {"B", r.B},
      {"alpha", {{"degree", r.alpha.degree}, {"log2", r.alpha.log2_alpha}, {"pass", r.alpha.pass}}},
      {"fca",
       {{"low_weight", r.fca.low_weight},
        {"decode", r.fca.decode},
        {"filter_specific", r.fca.filter_specific}}},
      {"beta", {{"log2", r.log2_beta}, {"pass", r.beta_pass()}}},
      {"gamma",
       {{"log2", r.gamma.log2_gamma},
        {"e", r.gamma.e},
        {"d", r.gamma.d},
        {"log2_d_sum", r.gamma.log2_d_sum},
        {"pass", r.gamma_pass()}}},
      {"fsga", taps::to_json(r.fsga)},
      {"nu", r.nu},
      {"delta", r.delta},
      {"chi", r.chi},
      {"filter_has_linear_w", r.filter_has_linear_w},
      {"register_covers_key_iv", r.register_covers_key_iv},
      {"pass", r.passed()},
  };
}

}  // namespace nlf::security
