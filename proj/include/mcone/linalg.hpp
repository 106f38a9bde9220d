#pragma once

#include "mcone/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mcone {

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<RVector>& rows);
  static Matrix from_columns(const std::vector<RVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RVector row(std::size_t r) const;
  RVector column(std::size_t c) const;
  Matrix transpose() const;

  RVector operator*(std::span<const Rational> v) const;
  Matrix operator*(const Matrix& other) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RVector operator+(const RVector& a, const RVector& b);
RVector operator-(const RVector& a, const RVector& b);
RVector operator-(const RVector& a);
RVector operator*(const Rational& s, const RVector& v);
RVector zeros(std::size_t n);
bool is_zero(std::span<const Rational> v);

/// Rank via exact Gaussian elimination.
std::size_t rank(const Matrix& m);

/// Rank of the matrix whose columns are `vectors` (all of equal length).
std::size_t rank(const std::vector<RVector>& vectors);

}  // namespace mcone
