#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ifs_cstar/linalg.hpp"
#include "ifs_cstar/rational.hpp"

namespace ifs_cstar {

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  // Lexicographic; lets points key ordered containers.
  friend bool operator<(const Point& a, const Point& b);

 private:
  std::vector<Rational> coords_;
};

// "p/q" in one dimension, "(a,b,...)" otherwise.
std::string to_string(const Point& p);

// x -> linear * x + offset.
class AffineMap {
 public:
  AffineMap() = default;
  AffineMap(RationalMatrix linear, std::vector<Rational> offset);

  static AffineMap identity(std::size_t dim);
  // One-dimensional x -> a x + b.
  static AffineMap scalar(Rational a, Rational b);

  std::size_t dim() const { return offset_.size(); }
  const RationalMatrix& linear() const { return linear_; }
  const std::vector<Rational>& offset() const { return offset_; }

  Point operator()(const Point& x) const;
  // (*this) o inner
  AffineMap compose(const AffineMap& inner) const;

  Rational determinant() const { return linear_.determinant(); }
  bool is_injective() const { return sgn(determinant()) != 0; }
  std::optional<AffineMap> inverse() const;
  // Every row and column of the linear part carries exactly one nonzero, so
  // axis-aligned boxes map to axis-aligned boxes.
  bool is_monomial() const;

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.linear_ == b.linear_ && a.offset_ == b.offset_;
  }

 private:
  RationalMatrix linear_;
  std::vector<Rational> offset_;
};

std::string to_string(const AffineMap& m);

}  // namespace ifs_cstar
