#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "coinv/numeric.hpp"

namespace coinv {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix diagonal(const std::vector<Integer>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Integer> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  IntVector row_vector(std::size_t r) const;
  std::vector<IntVector> row_vectors() const;

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;

  /// Exact determinant (fraction-free elimination). Square matrices only.
  Integer determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Row vector times matrix: x * M.
IntVector row_times(std::span<const Integer> x, const IntMatrix& m);
/// Matrix times column vector: M * x.
IntVector times_column(const IntMatrix& m, std::span<const Integer> x);

/// Parses a whitespace/line delimited integer matrix (one row per non-empty
/// line, '#' starts a comment). All rows must have the same length.
IntMatrix parse_int_matrix(const std::string& text);

}  // namespace coinv
