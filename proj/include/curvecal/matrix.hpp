#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace curvecal {

// Dense row-major integer matrix. All arithmetic is exact; overflow of a
// 64-bit entry raises LimitError.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::int64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);

// Fraction-free (Bareiss) elimination.
std::int64_t determinant(const IntMatrix& a);

// Integer inverse via unimodular row operations; empty when the matrix is
// singular or its inverse is not integral (|det| != 1).
std::optional<IntMatrix> integer_inverse(const IntMatrix& a);

}  // namespace curvecal
