#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "geomcfg/common.hpp"

namespace geomcfg {

/// Dense boolean matrix packed into 64-bit row words. Rows are the unit of
/// access because every pairwise-intersection count is a row AND + popcount.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_(static_cast<std::size_t>((cols + 63) / 64)),
        data_(static_cast<std::size_t>(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const {
    return (word(r, c / 64) >> (c % 64)) & 1u;
  }
  void set(int r, int c, bool v) {
    std::uint64_t& w = data_[static_cast<std::size_t>(r) * words_ + c / 64];
    if (v)
      w |= std::uint64_t(1) << (c % 64);
    else
      w &= ~(std::uint64_t(1) << (c % 64));
  }

  int row_popcount(int r) const {
    int s = 0;
    for (std::size_t k = 0; k < words_; ++k) s += popcount64(word(r, k));
    return s;
  }

  int row_and_popcount(int r1, int r2) const {
    int s = 0;
    for (std::size_t k = 0; k < words_; ++k) s += popcount64(word(r1, k) & word(r2, k));
    return s;
  }

  bool rows_equal(int r1, int r2) const {
    for (std::size_t k = 0; k < words_; ++k)
      if (word(r1, k) != word(r2, k)) return false;
    return true;
  }

  BitMatrix transposed() const {
    BitMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r, true);
    return t;
  }

  /// Entry-wise negation.
  BitMatrix negated() const {
    BitMatrix n(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) n.set(r, c, !get(r, c));
    return n;
  }

  std::vector<int> row_indices(int r) const {
    std::vector<int> out;
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) out.push_back(c);
    return out;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const BitMatrix& a, const BitMatrix& b) { return !(a == b); }

private:
  std::uint64_t word(int r, std::size_t k) const {
    return data_[static_cast<std::size_t>(r) * words_ + k];
  }

  int rows_ = 0;
  int cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace geomcfg
