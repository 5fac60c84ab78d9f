#include "ifs_cstar/sparse_op.hpp"

#include "ifs_cstar/errors.hpp"

namespace ifs_cstar {

SparseOp::SparseOp(BasisPtr basis)
    : basis_(std::move(basis)),
      cols_(basis_->size()),
      valid_cols_(basis_->size(), true),
      valid_rows_(basis_->size(), true) {}

void SparseOp::check_basis(const SparseOp& o) const {
  if (basis_ != o.basis_) throw BasisMismatch();
}

ComplexRational SparseOp::get(std::size_t row, std::size_t col) const {
  const auto& c = cols_.at(col);
  auto it = c.find(row);
  return it == c.end() ? ComplexRational() : it->second;
}

void SparseOp::set(std::size_t row, std::size_t col, const ComplexRational& v) {
  if (row >= size()) throw std::out_of_range("row index out of range");
  auto& c = cols_.at(col);
  if (v.is_zero())
    c.erase(row);
  else
    c[row] = v;
}

void SparseOp::add(std::size_t row, std::size_t col, const ComplexRational& v) {
  if (v.is_zero()) return;
  set(row, col, get(row, col) + v);
}

std::vector<std::size_t> SparseOp::valid_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < size(); ++c)
    if (valid_cols_[c]) out.push_back(c);
  return out;
}

std::vector<std::size_t> SparseOp::valid_rows() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < size(); ++r)
    if (valid_rows_[r]) out.push_back(r);
  return out;
}

std::size_t SparseOp::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

std::vector<std::tuple<std::size_t, std::size_t, ComplexRational>> SparseOp::entries() const {
  std::vector<std::tuple<std::size_t, std::size_t, ComplexRational>> out;
  for (std::size_t c = 0; c < size(); ++c)
    for (const auto& [r, v] : cols_[c]) out.emplace_back(r, c, v);
  return out;
}

SparseOp SparseOp::adjoint() const {
  SparseOp out(basis_);
  for (std::size_t c = 0; c < size(); ++c)
    for (const auto& [r, v] : cols_[c]) out.cols_[r][c] = v.conj();
  out.valid_cols_ = valid_rows_;
  out.valid_rows_ = valid_cols_;
  return out;
}

SparseOp operator*(const SparseOp& a, const SparseOp& b) {
  a.check_basis(b);
  const std::size_t n = a.size();
  SparseOp out(a.basis_);
  for (std::size_t c = 0; c < n; ++c) {
    bool valid = b.valid_cols_[c];
    auto& dst = out.cols_[c];
    for (const auto& [mid, v] : b.cols_[c]) {
      valid = valid && a.valid_cols_[mid];
      for (const auto& [r, u] : a.cols_[mid]) dst[r] += u * v;
    }
    std::erase_if(dst, [](const auto& kv) { return kv.second.is_zero(); });
    out.valid_cols_[c] = valid;
  }
  // Row r of a reaches columns mid; each must be a valid row of b.
  std::vector<bool> row_ok = a.valid_rows_;
  for (std::size_t mid = 0; mid < n; ++mid) {
    if (b.valid_rows_[mid]) continue;
    for (const auto& [r, u] : a.cols_[mid]) row_ok[r] = false;
  }
  out.valid_rows_ = row_ok;
  return out;
}

SparseOp operator+(const SparseOp& a, const SparseOp& b) {
  a.check_basis(b);
  SparseOp out = a;
  for (std::size_t c = 0; c < b.size(); ++c) {
    for (const auto& [r, v] : b.cols_[c]) out.add(r, c, v);
    out.valid_cols_[c] = a.valid_cols_[c] && b.valid_cols_[c];
    out.valid_rows_[c] = a.valid_rows_[c] && b.valid_rows_[c];
  }
  return out;
}

SparseOp operator-(const SparseOp& a, const SparseOp& b) { return a + ComplexRational(-1) * b; }

SparseOp operator*(const ComplexRational& c, const SparseOp& a) {
  SparseOp out = a;
  for (auto& col : out.cols_) {
    if (c.is_zero()) {
      col.clear();
      continue;
    }
    for (auto& [r, v] : col) v = c * v;
  }
  return out;
}

SparseOp SparseOp::valid_part() const {
  SparseOp out = *this;
  for (std::size_t c = 0; c < size(); ++c)
    if (!valid_cols_[c]) out.cols_[c].clear();
  return out;
}

std::optional<std::size_t> first_mismatch_on_valid_columns(const SparseOp& a, const SparseOp& b) {
  if (a.basis() != b.basis()) throw BasisMismatch();
  for (std::size_t c = 0; c < a.size(); ++c)
    if (a.valid_column(c) && b.valid_column(c) && a.column(c) != b.column(c)) return c;
  return std::nullopt;
}

SparseOp diag_expectation(const SparseOp& a) {
  SparseOp out = a;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const ComplexRational d = a.get(c, c);
    for (const auto& [r, v] : a.column(c)) out.set(r, c, ComplexRational());
    out.set(c, c, d);
  }
  return out;
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::diagonal: return "diagonal";
    case Relation::quasi_monomial: return "quasi-monomial";
    case Relation::general: return "general";
  }
  return "general";
}

Relation classify_relation(const SparseOp& a) {
  bool diagonal = true;
  bool one_to_one = true;
  std::vector<int> row_count(a.size(), 0);
  for (std::size_t c = 0; c < a.size(); ++c) {
    const auto& col = a.column(c);
    if (col.size() > 1) one_to_one = false;
    for (const auto& [r, v] : col) {
      if (r != c) diagonal = false;
      if (++row_count[r] > 1) one_to_one = false;
    }
  }
  if (diagonal) return Relation::diagonal;
  return one_to_one ? Relation::quasi_monomial : Relation::general;
}

}  // namespace ifs_cstar
