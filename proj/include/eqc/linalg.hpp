#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace eqc {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  // Columns given as vectors of equal length `rows`.
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix&) const = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Gauss-Jordan elimination; pivots are chosen as the leftmost nonzero column.
Echelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0}, returned as rows in reduced row echelon form.
std::vector<Vector> nullspace(const Matrix& m);

bool is_zero(const Vector& v);

// Incrementally grown subspace of Q^n kept in echelon form.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  // Residual of v after elimination against the current basis.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  // Returns true when v enlarged the subspace.
  bool insert(const Vector& v);

  // Canonical basis in reduced row echelon form.
  std::vector<Vector> basis() const;

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace eqc
