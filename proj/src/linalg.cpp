#include "ifs_cstar/linalg.hpp"

#include <stdexcept>

namespace ifs_cstar {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
    }
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
  return out;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  RationalMatrix m = *this;
  Rational det = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t pivot = col;
    while (pivot < rows_ && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == rows_) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  RationalMatrix m = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(m(pivot, c), m(col, c));
      std::swap(inv(pivot, c), inv(col, c));
    }
    const Rational scale = 1 / m(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m(r, col)) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= factor * m(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

std::size_t RationalMatrix::rank() const {
  std::vector<std::vector<Rational>> rows(rows_, std::vector<Rational>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) rows[r][c] = (*this)(r, c);
  return exact_rank(std::move(rows));
}

LinearSolution solve_linear(const RationalMatrix& m, const std::vector<Rational>& b) {
  const std::size_t nrows = m.rows();
  const std::size_t ncols = m.cols();
  if (b.size() != nrows) throw std::invalid_argument("right-hand side size mismatch");
  // Reduced row echelon form of [m | b].
  std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(ncols + 1));
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) a[r][c] = m(r, c);
    a[r][ncols] = b[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
    std::size_t pivot = row;
    while (pivot < nrows && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == nrows) continue;
    std::swap(a[pivot], a[row]);
    const Rational scale = 1 / a[row][col];
    for (auto& v : a[row]) v *= scale;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = 0; c <= ncols; ++c) a[r][c] -= factor * a[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < nrows; ++r)
    if (sgn(a[r][ncols]) != 0) return {};

  LinearSolution sol;
  sol.particular.assign(ncols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) sol.particular[pivot_cols[i]] = a[i][ncols];

  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    sol.null_basis.push_back(std::move(v));
  }
  sol.kind = sol.null_basis.empty() ? LinearSolution::Kind::unique : LinearSolution::Kind::affine;
  return sol;
}

}  // namespace ifs_cstar
