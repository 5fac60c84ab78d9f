#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ifs_cstar/orbit_basis.hpp"

namespace ifs_cstar {

// An X-squared matrix over a finite orbit basis. Columns are valid when the
// defining formula of the operator is fully inside the truncation there;
// rows likewise (so the adjoint's valid columns are the valid rows).
class SparseOp {
 public:
  // The zero operator with every row and column valid.
  explicit SparseOp(BasisPtr basis);

  const BasisPtr& basis() const { return basis_; }
  std::size_t size() const { return cols_.size(); }

  ComplexRational get(std::size_t row, std::size_t col) const;
  // Stores v; zero erases.
  void set(std::size_t row, std::size_t col, const ComplexRational& v);
  void add(std::size_t row, std::size_t col, const ComplexRational& v);
  const std::map<std::size_t, ComplexRational>& column(std::size_t col) const { return cols_[col]; }

  bool valid_column(std::size_t col) const { return valid_cols_[col]; }
  bool valid_row(std::size_t row) const { return valid_rows_[row]; }
  void set_valid_column(std::size_t col, bool v) { valid_cols_[col] = v; }
  void set_valid_row(std::size_t row, bool v) { valid_rows_[row] = v; }
  std::vector<std::size_t> valid_columns() const;
  std::vector<std::size_t> valid_rows() const;

  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }
  // (row, col, value), ordered by column then row.
  std::vector<std::tuple<std::size_t, std::size_t, ComplexRational>> entries() const;

  SparseOp adjoint() const;
  // Validity follows the conservative propagation rule: a product column is
  // valid when the right factor's column is, and every row it reaches is a
  // valid column of the left factor. Rows dually.
  friend SparseOp operator*(const SparseOp& a, const SparseOp& b);
  friend SparseOp operator+(const SparseOp& a, const SparseOp& b);
  friend SparseOp operator-(const SparseOp& a, const SparseOp& b);
  friend SparseOp operator*(const ComplexRational& c, const SparseOp& a);

  // Restricts to entries whose column is valid; keeps validity flags.
  SparseOp valid_part() const;

 private:
  void check_basis(const SparseOp& o) const;

  BasisPtr basis_;
  std::vector<std::map<std::size_t, ComplexRational>> cols_;
  std::vector<bool> valid_cols_;
  std::vector<bool> valid_rows_;
};

// First column valid in both operators on which they differ.
std::optional<std::size_t> first_mismatch_on_valid_columns(const SparseOp& a, const SparseOp& b);
inline bool equal_on_valid_columns(const SparseOp& a, const SparseOp& b) {
  return !first_mismatch_on_valid_columns(a, b);
}

SparseOp diag_expectation(const SparseOp& a);

enum class Relation { diagonal, quasi_monomial, general };
std::string to_string(Relation r);
Relation classify_relation(const SparseOp& a);

}  // namespace ifs_cstar
