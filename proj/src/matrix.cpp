#include "spechtvar/matrix.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "spechtvar/error.hpp"

namespace spechtvar::ff {

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto& r = s.rows_[i];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) r.push_back({static_cast<std::uint32_t>(j), m(i, j)});
    }
  }
  return s;
}

SparseMatrix SparseMatrix::from_triplets(
    const Field& field, std::size_t rows, std::size_t cols,
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Elem>> triplets) {
  std::sort(triplets.begin(), triplets.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseMatrix s(rows, cols);
  std::size_t i = 0;
  while (i < triplets.size()) {
    const auto key = triplets[i].first;
    Elem sum = 0;
    for (; i < triplets.size() && triplets[i].first == key; ++i) sum = field.add(sum, triplets[i].second);
    if (sum != 0) s.rows_[key.first].push_back({key.second, sum});
  }
  return s;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i) {
    for (const auto& e : rows_[i]) m(i, e.col) = e.value;
  }
  return m;
}

bool SparseMatrix::is_valid() const {
  for (const auto& r : rows_) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[j].value == 0 || r[j].col >= cols_) return false;
      if (j > 0 && r[j - 1].col >= r[j].col) return false;
    }
  }
  return true;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  }
  return t;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ArityMismatch, "multiply: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) field.axpy(out, a(i, k), b.row(k));
  }
  return c;
}

Matrix multiply(const Field& field, const SparseMatrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ArityMismatch, "multiply: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (const auto& e : a.row(i)) field.axpy(out, e.value, b.row(e.col));
  }
  return c;
}

Matrix add(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ArityMismatch, "add: shapes differ");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) field.axpy(c.row(i), 1, b.row(i));
  return c;
}

Matrix scaled(const Field& field, const Matrix& a, Elem s) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) field.scale(c.row(i), s);
  return c;
}

namespace {

// Forward elimination; returns pivot columns. When `reduce` is set the pivots
// are normalised to one and cleared above as well.
std::vector<std::size_t> eliminate(const Field& field, Matrix& m, bool reduce) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    const Elem inv = field.inv(m(r, c));
    if (reduce) field.scale(m.row(r).subspan(c), inv);
    const auto src = m.row(r).subspan(c);
    for (std::size_t i = reduce ? 0 : r + 1; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem factor = reduce ? field.neg(m(i, c)) : field.neg(field.mul(m(i, c), inv));
      field.axpy(m.row(i).subspan(c), factor, src);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> reduce_row_echelon(const Field& field, Matrix& m) {
  return eliminate(field, m, true);
}

std::size_t rank(const Field& field, const Matrix& m) {
  Matrix work = m;
  return eliminate(field, work, false).size();
}

Matrix solve_columns(const Field& field, const Matrix& b, const Matrix& c) {
  if (b.rows() != c.rows()) throw Error(ErrorCode::ArityMismatch, "solve_columns: row counts differ");
  const std::size_t d = b.cols();
  Matrix aug(b.rows(), d + c.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::copy(b.row(i).begin(), b.row(i).end(), aug.row(i).begin());
    std::copy(c.row(i).begin(), c.row(i).end(), aug.row(i).begin() + static_cast<std::ptrdiff_t>(d));
  }
  const auto pivots = reduce_row_echelon(field, aug);
  std::size_t brank = 0;
  while (brank < pivots.size() && pivots[brank] < d) ++brank;
  if (brank < d) throw Error(ErrorCode::RankDeficient, "solve_columns: B has dependent columns");
  if (pivots.size() > d) throw Error(ErrorCode::NoSolution, "solve_columns: C is not in the column space of B");
  Matrix x(d, c.cols());
  for (std::size_t i = 0; i < d; ++i) {
    const auto src = aug.row(i).subspan(d);
    std::copy(src.begin(), src.end(), x.row(i).begin());
  }
  return x;
}

Matrix nullspace(const Field& field, const Matrix& m) {
  Matrix work = m;
  const auto pivots = reduce_row_echelon(field, work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(m.cols() - pivots.size(), m.cols());
  std::size_t row = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(row, free) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(row, pivots[i]) = field.neg(work(i, free));
    ++row;
  }
  return basis;
}

}  // namespace spechtvar::ff
