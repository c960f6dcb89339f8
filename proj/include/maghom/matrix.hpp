#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "maghom/integer.hpp"

namespace maghom {

/// Sparse column of (row, value) entries, sorted by row, no explicit zeros.
using SparseColumn = std::vector<std::pair<std::size_t, Integer>>;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Column-major sparse integer matrix with explicit dimensions.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  /// Adds `value` to entry (r, c); entries that cancel to zero are removed.
  void add(std::size_t r, std::size_t c, const Integer& value);
  Integer at(std::size_t r, std::size_t c) const;

  const SparseColumn& column(std::size_t c) const { return columns_[c]; }
  void set_column(std::size_t c, SparseColumn col);

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  /// v^T M, i.e. the action on row vectors.
  IntVector left_multiply(const IntVector& v) const;

  IntMatrix to_dense() const;
  static SparseMatrix from_dense(const IntMatrix& m);

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseColumn> columns_;
};

/// Sparse column arithmetic: a + factor * b.
SparseColumn axpy(const SparseColumn& a, const Integer& factor, const SparseColumn& b);

}  // namespace maghom
