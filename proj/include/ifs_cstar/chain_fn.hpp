#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "ifs_cstar/affine.hpp"
#include "ifs_cstar/polynomial.hpp"

namespace ifs_cstar {

// Polynomial function on the space of chains (x_n, ..., x_0) of a fixed
// length n. Variable t_i reads chain position i (t_0 is the base point); in
// d dimensions t_i expands to t_i_0 .. t_i_{d-1}.
class ChainFn {
 public:
  ChainFn(std::size_t length, std::size_t dim, Polynomial poly);

  static ChainFn constant(std::size_t length, std::size_t dim, const ComplexRational& c);
  static ChainFn parse(std::string_view text, std::size_t length, std::size_t dim);
  static std::size_t variable(std::size_t position, std::size_t coord, std::size_t dim) {
    return position * dim + coord;
  }

  std::size_t length() const { return length_; }
  std::size_t dim() const { return dim_; }
  const Polynomial& poly() const { return poly_; }

  // `points` is ordered (x_n, ..., x_0).
  ComplexRational evaluate(std::span<const Point> points) const;

  friend bool operator==(const ChainFn&, const ChainFn&) = default;

 private:
  std::size_t length_;
  std::size_t dim_;
  Polynomial poly_;
};

// A function on X itself.
using PolyFn = ChainFn;

std::string to_string(const ChainFn& f);

// Function on bichains ((x_m..x_0), (y_n..y_0)) with x_0 = y_0. Variables
// x_i and y_j (coordinate-expanded as for ChainFn).
class BichainFn {
 public:
  BichainFn(std::size_t left_length, std::size_t right_length, std::size_t dim, Polynomial poly);

  static BichainFn constant(std::size_t left_length, std::size_t right_length, std::size_t dim,
                            const ComplexRational& c);
  static BichainFn parse(std::string_view text, std::size_t left_length, std::size_t right_length, std::size_t dim);

  std::size_t left_length() const { return m_; }
  std::size_t right_length() const { return n_; }
  std::size_t dim() const { return dim_; }
  const Polynomial& poly() const { return poly_; }

  std::size_t left_variable(std::size_t position, std::size_t coord) const { return position * dim_ + coord; }
  std::size_t right_variable(std::size_t position, std::size_t coord) const {
    return (m_ + 1 + position) * dim_ + coord;
  }

  ComplexRational evaluate(std::span<const Point> left, std::span<const Point> right) const;

  // (x, y) -> conj f(y, x), a function on the swapped bichain space.
  BichainFn swapped_conjugate() const;

  friend bool operator==(const BichainFn&, const BichainFn&) = default;

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t dim_;
  Polynomial poly_;
};

std::string to_string(const BichainFn& f);

// (f [.] g)(x_{m+n}, ..., x_0) = f(x_{m+n}, ..., x_n) g(x_n, ..., x_0).
ChainFn boxdot(const ChainFn& f, const ChainFn& g);

// (f [x] g)(x, y) = f(x) conj(g(y)).
BichainFn boxtimes(const ChainFn& f, const ChainFn& g);

// (a . f)(x_1, x_0) = a(x_1) f(x_1, x_0) for a on X and f on the graph.
ChainFn left_action(const PolyFn& a, const ChainFn& f);

}  // namespace ifs_cstar
