#include "nlf/tapsearch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

namespace nlf::taps {

PosVector PosVector::from_layout(const cipher::TapLayout& t) {
  return {t.kappa, t.L, t.cells()};
}

PosVector PosVector::from_strings(int kappa, std::size_t L, const Bits& posX, const Bits& posY) {
  return from_layout(cipher::derive_taps(kappa, L, posX, posY));
}

Bits PosVector::pos_x() const {
  const auto k = static_cast<std::size_t>(kappa);
  Bits b(k);
  for (std::size_t q = 0; q < k; ++q) b.set(q, cells.get(L - 1 - q));
  return b;
}

Bits PosVector::pos_y() const {
  const auto k = static_cast<std::size_t>(kappa);
  Bits b(k);
  // q = kappa-1 would be the W cell L - 2 kappa; posY keeps that bit 0.
  for (std::size_t q = 0; q + 1 < k; ++q) b.set(q, cells.get(L - 1 - k - q));
  return b;
}

cipher::TapLayout PosVector::layout() const {
  return cipher::derive_taps(kappa, L, pos_x(), pos_y());
}

int max_shift_overlap(const Bits& s, std::size_t tmax_exclusive) {
  int best = 0;
  for (std::size_t t = 1; t < tmax_exclusive && t < s.size(); ++t) {
    best = std::max(best, static_cast<int>(s.popcount_and(s.shifted_up(t))));
  }
  return best;
}

int nu_of(const Bits& posX) { return max_shift_overlap(posX, posX.size()); }

int delta_of(const PosVector& pos) {
  return max_shift_overlap(pos.cells, 2 * static_cast<std::size_t>(pos.kappa));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: empty range");
  // Reject the lowest (2^64 mod n) values so every residue is equally likely.
  const std::uint64_t reject = (std::uint64_t{0} - n) % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= reject) return x % n;
  }
}

namespace {

// m-1 distinct values from [lo, hi] by a partial Fisher-Yates shuffle.
std::vector<std::size_t> sample(std::size_t lo, std::size_t hi, std::size_t count,
                                std::mt19937_64& rng) {
  std::vector<std::size_t> pool(hi - lo + 1);
  std::iota(pool.begin(), pool.end(), lo);
  for (std::size_t k = 0; k < count; ++k) {
    const auto r = k + uniform_below(rng, pool.size() - k);
    std::swap(pool[k], pool[r]);
  }
  pool.resize(count);
  return pool;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

PosVector random_pos(int kappa, std::size_t L, std::size_t m, std::mt19937_64& rng) {
  const auto k = static_cast<std::size_t>(kappa);
  if (m == 0 || k < 3 || m - 1 > k - 2 || L < 2 * k) {
    throw std::invalid_argument("random_pos: infeasible sizes kappa=" + std::to_string(kappa) +
                                " L=" + std::to_string(L) + " m=" + std::to_string(m));
  }
  cipher::TapLayout t;
  t.kappa = kappa;
  t.L = L;
  t.wtap = L - 2 * k;
  t.i = {0};
  if (m > 1) {
    for (auto v : sample(1, k - 1, m - 1, rng)) t.i.push_back(v);
    for (auto v : sample(k, 2 * k - 3, m - 1, rng)) t.j.push_back(v);
  }
  t.j.push_back(2 * k - 2);
  std::sort(t.i.begin(), t.i.end());
  std::sort(t.j.begin(), t.j.end());
  return PosVector::from_layout(t);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ trial);
}

SearchResult search(int kappa, std::size_t L, std::size_t m, std::uint64_t trials,
                    std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw std::invalid_argument("search needs at least one trial");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

  struct Best {
    int nu = -1;
    std::uint64_t trial = 0;
  };
  std::vector<Best> best(threads);
  auto worker = [&](unsigned w) {
    for (std::uint64_t tr = w; tr < trials; tr += threads) {
      std::mt19937_64 rng(trial_seed(seed, tr));
      const int nu = nu_of(random_pos(kappa, L, m, rng).pos_x());
      if (best[w].nu < 0 || nu < best[w].nu) best[w] = {nu, tr};
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker, w);
  worker(0);
  for (auto& th : pool) th.join();

  Best win = best[0];
  for (const auto& b : best) {
    if (b.nu < win.nu || (b.nu == win.nu && b.trial < win.trial)) win = b;
  }
  std::mt19937_64 rng(trial_seed(seed, win.trial));
  SearchResult r{random_pos(kappa, L, m, rng), win.nu, 0, trials, seed, win.trial};
  r.delta = delta_of(r.pos);
  return r;
}

bool qterm_distinct(const cipher::TapLayout& t, std::size_t L, std::size_t tmax) {
  const std::size_t m = t.m();
  std::unordered_map<std::uint64_t, std::uint64_t> seen;
  seen.reserve((tmax + 1) * m * 2);
  for (std::size_t s = 0; s <= tmax; ++s) {
    for (std::size_t p = 0; p < m; ++p) {
      const std::size_t a = L + s - 1 - t.i[p];
      const std::size_t b = L + s - 1 - t.j[m - 1 - p];
      const std::uint64_t key = (std::uint64_t{std::min(a, b)} << 32) | std::max(a, b);
      if (!seen.emplace(key, s * m + p).second) return false;
    }
  }
  return true;
}

FsgaMargin fsga_margin(std::size_t n, std::size_t L, int delta, int kappa) {
  if (n == 0 || L == 0 || delta < 0) throw std::invalid_argument("fsga_margin: bad arguments");
  const double Ld = static_cast<double>(L);
  const double tail = std::log2(Ld * Ld * Ld + Ld * static_cast<double>(n));
  auto eval = [&](std::size_t c) {
    const double cd = static_cast<double>(c);
    return (static_cast<double>(n) - 1) * cd - delta * cd * (cd - 1) / 2 + tail;
  };
  FsgaMargin f;
  f.c = (L + n - 1) / n;
  f.log2_complexity = eval(f.c);
  f.pass = f.log2_complexity > kappa;
  f.log2_complexity_c2 = eval(2);
  f.pass_c2 = f.log2_complexity_c2 > kappa;
  return f;
}

nlohmann::json to_json(const SearchResult& r) {
  return {{"kappa", r.pos.kappa}, {"L", r.pos.L},          {"m", r.pos.layout().m()},
          {"posX", r.pos.pos_x().to_hex()}, {"posY", r.pos.pos_y().to_hex()},
          {"nu", r.nu},          {"delta", r.delta},      {"trials", r.trials},
          {"seed", r.seed},      {"best_trial", r.best_trial}};
}

nlohmann::json to_json(const FsgaMargin& f) {
  return {{"c", f.c},
          {"log2_complexity", f.log2_complexity},
          {"pass", f.pass},
          {"log2_complexity_c2", f.log2_complexity_c2},
          {"pass_c2", f.pass_c2}};
}

}  // namespace nlf::taps
