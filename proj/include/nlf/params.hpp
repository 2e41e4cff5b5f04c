#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

// The six shipped parameter sets, parsed from the text asset compiled into
// the library, and the cross-table self-check over them.
namespace nlf::params {

struct ParameterRow {
  int level = 0;
  std::size_t L = 0;
  std::size_t m = 0;
  std::vector<int> poly;  // exponents, highest first
  std::string posX;       // hex
  std::string posY;       // hex
  std::vector<std::size_t> d;
  // Expected metrics as listed in the tables.
  int deg = 0;
  int lb = 0;  // LB = 2^-lb
  int ai = 0;
  int fai = 0;
  int nu = 0;
  int delta = 0;
  std::array<double, 5> gates{};  // lfsr, filter, nb, ir, total
};

std::vector<ParameterRow> parse_table(std::string_view text);

std::string_view asset_text();
// FNV-1a 64 over asset_text().
std::uint64_t asset_checksum();
std::uint64_t fnv1a64(std::string_view data);

const std::vector<ParameterRow>& table();
// Throws std::invalid_argument for unknown levels.
const ParameterRow& row(int level);

struct Check {
  std::string name;
  bool passed = false;
  bool informational = false;  // reported, not part of the verdict
  std::string detail;
};

struct RowVerdict {
  int level = 0;
  std::vector<Check> checks;

  bool passed() const;
  const Check* find(std::string_view name) const;
};

RowVerdict check_row(const ParameterRow& r);
std::vector<RowVerdict> self_check();

nlohmann::json to_json(const RowVerdict& v);

}  // namespace nlf::params
