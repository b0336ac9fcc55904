#include "eqc/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace eqc {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    assert(columns[c].size() == rows);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  assert(cols_ == rhs.rows_);
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  assert(v.size() == cols_);
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(v[k]) != 0) out[i] += (*this)(i, k) * v[k];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Echelon row_reduce(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pick = lead;
    while (pick < rows && sgn(m(pick, col)) == 0) ++pick;
    if (pick == rows) continue;
    if (pick != lead) {
      for (std::size_t c = col; c < cols; ++c) swap(m(pick, c), m(lead, c));
    }
    const Rational inv = 1 / m(lead, col);
    for (std::size_t c = col; c < cols; ++c) m(lead, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c) m(r, c) -= factor * m(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  Matrix reduced(pivots.size(), cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) reduced(r, c) = m(r, c);
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  const Echelon ech = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  const Echelon canon = row_reduce(Matrix::from_rows(cols, basis));
  std::vector<Vector> out;
  out.reserve(canon.pivots.size());
  for (std::size_t r = 0; r < canon.pivots.size(); ++r) out.push_back(canon.reduced.row(r));
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector Subspace::reduce(Vector v) const {
  assert(v.size() == ambient_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p];
    for (std::size_t c = p; c < ambient_; ++c) v[c] -= factor * rows_[i][c];
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::insert(const Vector& v) {
  Vector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (it == r.end()) return false;
  const auto p = static_cast<std::size_t>(it - r.begin());
  const Rational inv = 1 / r[p];
  for (std::size_t c = p; c < ambient_; ++c) r[c] *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

std::vector<Vector> Subspace::basis() const {
  if (rows_.empty()) return {};
  const Echelon ech = row_reduce(Matrix::from_rows(ambient_, rows_));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) out.push_back(ech.reduced.row(r));
  return out;
}

}  // namespace eqc
