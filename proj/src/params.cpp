#include "nlf/params.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "nlf/cipher.hpp"
#include "nlf/gatecount.hpp"
#include "nlf/params_asset.hpp"
#include "nlf/tapsearch.hpp"

namespace nlf::params {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw std::invalid_argument("parameter table line " + std::to_string(line) + ": " + what);
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

std::vector<ParameterRow> parse_table(std::string_view text) {
  std::vector<ParameterRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key.empty()) continue;
    if (key == "level") {
      rows.emplace_back();
      ls >> rows.back().level;
    } else if (rows.empty()) {
      parse_error(lineno, "'" + key + "' before any level");
    } else {
      auto& r = rows.back();
      if (key == "L") {
        ls >> r.L;
      } else if (key == "m") {
        ls >> r.m;
      } else if (key == "poly") {
        for (int e; ls >> e;) r.poly.push_back(e);
      } else if (key == "posX") {
        ls >> r.posX;
      } else if (key == "posY") {
        ls >> r.posY;
      } else if (key == "d") {
        for (std::size_t v; ls >> v;) r.d.push_back(v);
      } else if (key == "deg") {
        ls >> r.deg;
      } else if (key == "lb") {
        ls >> r.lb;
      } else if (key == "ai") {
        ls >> r.ai;
      } else if (key == "fai") {
        ls >> r.fai;
      } else if (key == "nu") {
        ls >> r.nu;
      } else if (key == "delta") {
        ls >> r.delta;
      } else if (key == "gates") {
        for (auto& g : r.gates) ls >> g;
      } else {
        parse_error(lineno, "unknown key '" + key + "'");
      }
    }
    if (ls.fail() && !ls.eof()) parse_error(lineno, "malformed value");
  }
  return rows;
}

std::string_view asset_text() { return detail::kTableAsset; }

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t asset_checksum() { return fnv1a64(asset_text()); }

const std::vector<ParameterRow>& table() {
  static const std::vector<ParameterRow> rows = parse_table(asset_text());
  return rows;
}

const ParameterRow& row(int level) {
  for (const auto& r : table()) {
    if (r.level == level) return r;
  }
  throw std::invalid_argument("unknown security level " + std::to_string(level) +
                              " (expected 80, 128, 160, 192, 224 or 256)");
}

bool RowVerdict::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed || c.informational; });
}

const Check* RowVerdict::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

RowVerdict check_row(const ParameterRow& r) {
  RowVerdict v{r.level, {}};
  auto check = [&](std::string name, bool ok, std::string detail = {}) {
    v.checks.push_back({std::move(name), ok, false, std::move(detail)});
  };
  const auto k = static_cast<std::size_t>(r.level);

  check("hex_length", r.posX.size() == k / 4 && r.posY.size() == k / 4,
        std::to_string(r.posX.size()) + "/" + std::to_string(r.posY.size()) + " digits");
  Bits posX, posY;
  try {
    posX = Bits::from_hex(r.posX, k);
    posY = Bits::from_hex(r.posY, k);
  } catch (const std::exception& e) {
    check("hex_parse", false, e.what());
    return v;
  }
  check("posX_weight", posX.popcount() == r.m, std::to_string(posX.popcount()));
  check("posY_weight", posY.popcount() == r.m, std::to_string(posY.popcount()));
  const auto xs = posX.ones();
  const auto ys = posY.ones();
  check("i1_zero", !xs.empty() && xs.front() == 0);
  const std::size_t jm = ys.empty() ? 0 : k + ys.back();
  check("jm_endpoint", jm == 2 * k - 2,
        "j_m = " + std::to_string(jm) + ", expected " + std::to_string(2 * k - 2));
  check("posY_window", !posY.get(k - 1), "last posY bit must be 0");
  check("register_length", r.L > 2 * k);
  check("m_bound", 2 * r.m + 1 < k);
  bool first_prime = is_prime(r.L);
  for (std::size_t q = 2 * k + 1; q < r.L && first_prime; ++q) first_prime = !is_prime(q);
  check("L_first_prime", first_prime);

  std::optional<lfsr::ConnectionPoly> poly;
  try {
    poly.emplace(r.poly);
  } catch (const std::exception& e) {
    check("poly_parse", false, e.what());
    return v;
  }
  check("poly_degree", poly->L() == r.L);
  if (poly->L() != r.L || r.L <= 2 * k || posX.popcount() != posY.popcount() || xs.empty() ||
      xs.front() != 0 || posY.get(k - 1)) {
    check("tap_layout", false, "cannot decode taps");
    return v;
  }

  const auto layout = cipher::derive_taps(r.level, r.L, posX, posY);
  const Bits cells = layout.cells();
  const bool d_in_range = std::all_of(r.d.begin(), r.d.end(), [&](auto i) { return i < r.L; });
  check("d_in_range", d_in_range);
  if (!d_in_range) return v;
  const Bits dvec = Bits::from_positions(r.L, r.d);
  check("d_top", dvec.get(r.L - 1), "d_{L-1} must be 1");
  std::vector<std::size_t> low, under_c, under_pos;
  for (auto i : dvec.ones()) {
    if (i < r.L - 2 * k) low.push_back(i);
    if (i + 1 < r.L && poly->coeffs().get(i + 1)) under_c.push_back(i);
    if (i + 1 < r.L && cells.get(i + 1)) under_pos.push_back(i);
  }
  check("d_low_zero", low.empty(), join(low));
  check("d_feedback_zero", under_c.empty(), join(under_c));
  check("d_tap_zero", under_pos.empty(), join(under_pos));
  const std::size_t mu = cipher::CipherParams::mu_for(r.level);
  v.checks.push_back({"d_weight_mu", dvec.popcount() == mu, true,
                      "wt(d) = " + std::to_string(dvec.popcount()) + ", mu = " + std::to_string(mu)});

  check("poly_irreducible", lfsr::is_irreducible(*poly));

  const int nu = taps::nu_of(posX);
  const int delta = taps::delta_of(taps::PosVector::from_layout(layout));
  check("nu", nu == r.nu, std::to_string(nu) + " vs " + std::to_string(r.nu));
  check("delta", delta == r.delta, std::to_string(delta) + " vs " + std::to_string(r.delta));
  check("nu_half_m", static_cast<std::size_t>(nu) <= r.m / 2);

  const auto deg = static_cast<int>(std::bit_floor(r.m));
  check("deg", deg == r.deg, std::to_string(deg) + " vs " + std::to_string(r.deg));
  check("lb", static_cast<int>(r.m) + 1 == r.lb);
  check("ai", static_cast<int>((r.m + 1) / 2) == r.ai);
  check("fai", r.fai == r.ai + 1);

  const cipher::CipherParams p{r.level, r.L, r.m, *poly, posX, posY, dvec, mu};
  const auto g = gates::cipher_units(p);
  const std::array<double, 5> got{g.lfsr, g.filter, g.nb, g.ir, g.total};
  check("gates", got == r.gates,
        std::to_string(g.lfsr) + " " + std::to_string(g.filter) + " " + std::to_string(g.nb) + " " +
            std::to_string(g.ir) + " " + std::to_string(g.total));
  return v;
}

std::vector<RowVerdict> self_check() {
  std::vector<RowVerdict> out;
  for (const auto& r : table()) out.push_back(check_row(r));
  return out;
}

nlohmann::json to_json(const RowVerdict& v) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : v.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.passed},
                      {"informational", c.informational},
                      {"detail", c.detail}});
  }
  return {{"level", v.level}, {"pass", v.passed()}, {"checks", checks}};
}

}  // namespace nlf::params
