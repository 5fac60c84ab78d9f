#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ifs_cstar/rational.hpp"

namespace ifs_cstar {

// Small dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Rational determinant() const;
  std::optional<RationalMatrix> inverse() const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Solution set of M x = b.
struct LinearSolution {
  enum class Kind { none, unique, affine };
  Kind kind = Kind::none;
  std::vector<Rational> particular;               // valid unless kind == none
  std::vector<std::vector<Rational>> null_basis;  // non-empty iff kind == affine
};

LinearSolution solve_linear(const RationalMatrix& m, const std::vector<Rational>& b);

// Rank by Gaussian elimination over any exact field type
// providing ==, -, *, / and a default-constructed zero.
template <typename Field>
std::size_t exact_rank(std::vector<std::vector<Field>> rows) {
  const Field zero{};
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == zero) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Field inv = Field(1) / rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == zero) continue;
      const Field factor = rows[r][col] * inv;
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] = rows[r][c] - factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace ifs_cstar
