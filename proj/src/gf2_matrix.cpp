#include "gf2_matrix.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace nlf::detail {

void Gf2Matrix::add_row(Bits row) {
  if (row.size() != cols_) throw std::invalid_argument("row length does not match matrix width");
  rows_.push_back(std::move(row));
}

std::size_t Gf2Matrix::rank() const {
  std::vector<Bits> m = rows_;
  const std::size_t nwords = word_count(cols_);
  std::size_t rank = 0;
  for (std::size_t w = 0; w < nwords && rank < m.size(); ++w) {
    for (int b = 0; b < 64 && rank < m.size(); ++b) {
      const std::uint64_t mask = std::uint64_t{1} << b;
      std::size_t pivot = rank;
      while (pivot < m.size() && !(m[pivot].words()[w] & mask)) ++pivot;
      if (pivot == m.size()) continue;
      std::swap(m[rank], m[pivot]);
      const auto prow = m[rank].words();
      for (std::size_t r = rank + 1; r < m.size(); ++r) {
        auto row = m[r].words();
        if (!(row[w] & mask)) continue;
        // Columns before w are already zero in both rows.
        for (std::size_t k = w; k < nwords; ++k) row[k] ^= prow[k];
      }
      ++rank;
    }
  }
  return rank;
}

}  // namespace nlf::detail
