#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "spechtvar/field.hpp"

namespace spechtvar::ff {

/// Dense row-major matrix of packed field elements. The zero-initialised
/// matrix is the zero matrix in every field, so the type does not carry its
/// field; operations take the Field explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::span<const Elem> data() const { return data_; }

  bool is_zero() const;
  void swap_rows(std::size_t a, std::size_t b);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// Row-wise sparse matrix: column indices strictly increasing per row, no
/// stored zeros.
class SparseMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    Elem value;
    bool operator==(const Entry&) const = default;
  };

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix from_dense(const Matrix& m);
  /// Triplets (row, col, value); duplicates are summed in `field`.
  static SparseMatrix from_triplets(const Field& field, std::size_t rows, std::size_t cols,
                                    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Elem>> triplets);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  std::span<const Entry> row(std::size_t i) const { return rows_[i]; }
  /// Replaces row i; entries must already satisfy the row invariant.
  void set_row(std::size_t i, std::vector<Entry> entries) { rows_[i] = std::move(entries); }

  Matrix to_dense() const;
  bool is_valid() const;

  bool operator==(const SparseMatrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

Matrix transpose(const Matrix& m);
Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
Matrix multiply(const Field& field, const SparseMatrix& a, const Matrix& b);
Matrix add(const Field& field, const Matrix& a, const Matrix& b);
Matrix scaled(const Field& field, const Matrix& a, Elem c);

/// Gaussian elimination in place to reduced row echelon form; returns the pivot
/// columns. Rows below the rank end up zero.
std::vector<std::size_t> reduce_row_echelon(const Field& field, Matrix& m);

/// Dimension of the column space. The input is not modified.
std::size_t rank(const Field& field, const Matrix& m);

/// The unique X with B X = C. Throws Error(RankDeficient) when B's columns are
/// dependent and Error(NoSolution) when colspace(C) is not inside colspace(B).
Matrix solve_columns(const Field& field, const Matrix& b, const Matrix& c);

/// Basis of {v : M v = 0} as the rows of the result, in the canonical form
/// obtained from the reduced row echelon form of M (one vector per free column,
/// with a 1 in that column).
Matrix nullspace(const Field& field, const Matrix& m);

}  // namespace spechtvar::ff
