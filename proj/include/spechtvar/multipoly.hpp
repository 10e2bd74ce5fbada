#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spechtvar/field.hpp"

namespace spechtvar::ff {

/// Sparse polynomial in at most 8 variables with GF(p) coefficients. Terms are
/// kept sorted in descending lex order (x1 > x2 > ...), zero coefficients are
/// never stored. Exponents are limited to 255 per variable.
class MultiPoly {
 public:
  static constexpr unsigned kMaxVars = 8;
  static constexpr unsigned kMaxExponent = 255;

  using Monomial = std::uint64_t;
  struct Term {
    Monomial mono;
    unsigned coeff;
    bool operator==(const Term&) const = default;
  };

  MultiPoly(unsigned nvars, unsigned p);

  static MultiPoly constant(unsigned nvars, unsigned p, long long c);
  /// x_{i+1}, zero-based index.
  static MultiPoly variable(unsigned nvars, unsigned p, unsigned i);
  static Monomial pack(std::span<const unsigned> exponents);
  std::vector<unsigned> exponents(Monomial m) const;

  unsigned nvars() const { return nvars_; }
  unsigned characteristic() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(std::span<const unsigned> exponents, long long coeff);
  unsigned coefficient(std::span<const unsigned> exponents) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(unsigned c) const;
  bool operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && p_ == o.p_ && terms_ == o.terms_;
  }

  /// "x1^2*x2^2 + 2*x3", "0" for zero.
  std::string to_string() const;

 private:
  friend MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);
  MultiPoly combine(const MultiPoly& o, unsigned factor) const;  // this + factor*o
  unsigned max_exponent() const;

  unsigned nvars_;
  unsigned p_;
  std::vector<Term> terms_;
};

/// a / b when b divides a exactly; throws Error(NoSolution) otherwise.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

/// f(point) with the GF(p) coefficients embedded in `field`. Throws
/// Error(ArityMismatch) when the point length differs from nvars.
Elem poly_eval(const Field& field, const MultiPoly& f, std::span<const Elem> point);

/// Dense matrix of polynomials, used for the exact function-field mode.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, unsigned nvars, unsigned p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MultiPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const MultiPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MultiPoly> entries_;
};

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

/// Rank over the rational function field GF(p)(x_1..x_n) by fraction-free
/// (Bareiss) elimination; every division is exact.
std::size_t fraction_free_rank(PolyMatrix m);

}  // namespace spechtvar::ff
