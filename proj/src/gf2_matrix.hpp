#pragma once

#include <cstddef>
#include <vector>

#include "nlf/bits.hpp"

namespace nlf::detail {

// Dense GF(2) matrix stored as row bit strings of equal length.
class Gf2Matrix {
 public:
  explicit Gf2Matrix(std::size_t cols) : cols_(cols) {}

  void add_row(Bits row);
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // Row rank by forward elimination; consumes a copy of the rows.
  std::size_t rank() const;

 private:
  std::size_t cols_;
  std::vector<Bits> rows_;
};

}  // namespace nlf::detail
