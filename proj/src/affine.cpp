#include "ifs_cstar/affine.hpp"

#include <stdexcept>

namespace ifs_cstar {

bool operator<(const Point& a, const Point& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.dim() < b.dim();
}

std::string to_string(const Point& p) {
  if (p.dim() == 1) return to_string(p[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) out += ",";
    out += to_string(p[i]);
  }
  return out + ")";
}

AffineMap::AffineMap(RationalMatrix linear, std::vector<Rational> offset)
    : linear_(std::move(linear)), offset_(std::move(offset)) {
  if (linear_.rows() != offset_.size() || linear_.cols() != offset_.size())
    throw std::invalid_argument("affine map: linear part must be square and match the offset");
}

AffineMap AffineMap::identity(std::size_t dim) {
  return {RationalMatrix::identity(dim), std::vector<Rational>(dim, Rational(0))};
}

AffineMap AffineMap::scalar(Rational a, Rational b) {
  RationalMatrix m(1, 1);
  m(0, 0) = std::move(a);
  return {std::move(m), {std::move(b)}};
}

Point AffineMap::operator()(const Point& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("affine map: point dimension mismatch");
  std::vector<Rational> y = offset_;
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c)
      if (sgn(linear_(r, c)) != 0) y[r] += linear_(r, c) * x[c];
  return Point(std::move(y));
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  std::vector<Rational> off = linear_ * inner.offset_;
  for (std::size_t i = 0; i < off.size(); ++i) off[i] += offset_[i];
  return {linear_ * inner.linear_, std::move(off)};
}

std::optional<AffineMap> AffineMap::inverse() const {
  auto inv = linear_.inverse();
  if (!inv) return std::nullopt;
  std::vector<Rational> off = (*inv) * offset_;
  for (auto& v : off) v = -v;
  return AffineMap(std::move(*inv), std::move(off));
}

bool AffineMap::is_monomial() const {
  const std::size_t d = dim();
  std::vector<int> row_count(d, 0), col_count(d, 0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (sgn(linear_(r, c)) != 0) {
        ++row_count[r];
        ++col_count[c];
      }
  for (std::size_t i = 0; i < d; ++i)
    if (row_count[i] != 1 || col_count[i] != 1) return false;
  return true;
}

std::string to_string(const AffineMap& m) {
  if (m.dim() == 1) return "x -> " + to_string(m.linear()(0, 0)) + "*x + " + to_string(m.offset()[0]);
  std::string out = "x -> [";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    if (r) out += "; ";
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c) out += " ";
      out += to_string(m.linear()(r, c));
    }
  }
  out += "] x + (";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i) out += ",";
    out += to_string(m.offset()[i]);
  }
  return out + ")";
}

}  // namespace ifs_cstar
