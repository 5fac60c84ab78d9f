#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifs_cstar/rational.hpp"

namespace ifs_cstar {

// Exponent vector, one entry per variable.
using Monomial = std::vector<unsigned>;

// Multivariate polynomial with complex-rational coefficients in real variables.
// Terms with zero coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const ComplexRational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& exponents, const ComplexRational& c = ComplexRational(1));

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, ComplexRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned total_degree() const;

  void add_term(const Monomial& exponents, const ComplexRational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const ComplexRational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const ComplexRational& c) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= ComplexRational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Conjugates the coefficients; variables are real.
  Polynomial conj() const;
  Polynomial pow(unsigned e) const;

  ComplexRational evaluate(std::span<const Rational> values) const;

  // Variable i becomes variable mapping[i] of an `nvars`-variable ring.
  Polynomial remap(const std::vector<std::size_t>& mapping, std::size_t nvars) const;

  // Replaces variable i by images[i]; all images share one ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

 private:
  void check_ring(const Polynomial& o) const;

  std::size_t nvars_;
  std::map<Monomial, ComplexRational> terms_;
};

using VariableNamer = std::function<std::string(std::size_t)>;
using VariableResolver = std::function<std::optional<std::size_t>(std::string_view)>;

std::string to_string(const Polynomial& p, const VariableNamer& name);

// Grammar: sums/differences of products of factors; factors are rational
// literals (p or p/q), the imaginary unit `i`, variables accepted by
// `resolve`, parenthesised expressions, and any factor raised to `^k` with a
// non-negative integer k. Unary minus is allowed. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars, const VariableResolver& resolve);

// All monomials in `nvars` variables of total degree <= max_degree, in
// graded lexicographic order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree);

}  // namespace ifs_cstar
