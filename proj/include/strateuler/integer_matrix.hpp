/// @file integer_matrix.hpp
/// @brief Dense square integer matrices with exact unitriangular inversion.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "strateuler/checked.hpp"

namespace strateuler {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

bool is_upper_unitriangular(const IntMatrix& m);

/// Inverse of an upper unitriangular matrix by back substitution. The inverse
/// is again upper unitriangular with integer entries; no division occurs.
/// Throws NotUnitriangular otherwise, IntegerOverflow if entries leave int64.
IntMatrix invert_upper_unitriangular(const IntMatrix& m);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace strateuler
