#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace ifs_cstar {

// Always canonical (lowest terms, positive denominator) after any arithmetic.
using Rational = mpq_class;

// Parses "p", "-p", "p/q". Throws ParseError (with offset) on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

Rational rational_abs(const Rational& q);

std::strong_ordering compare(const Rational& a, const Rational& b);

class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  ComplexRational(long re) : re_(re) {}  // NOLINT(implicit)

  static ComplexRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ComplexRational conj() const { return {re_, -im_}; }
  // |z|^2, exact.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  double abs() const;
  // Throws std::domain_error on zero.
  ComplexRational inverse() const;

  ComplexRational& operator+=(const ComplexRational& o);
  ComplexRational& operator-=(const ComplexRational& o);
  ComplexRational& operator*=(const ComplexRational& o);

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    return a * b.inverse();
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

// "a", "a*i", or "a+b*i" with rationals in p/q form.
std::string to_string(const ComplexRational& z);

}  // namespace ifs_cstar
