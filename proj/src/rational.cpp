#include "ifs_cstar/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "ifs_cstar/errors.hpp"

namespace ifs_cstar {

namespace {

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  const std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t num_end = scan_digits(text, pos);
  if (num_end == pos) throw ParseError("expected integer numerator", pos);
  std::string numerator(text.substr(start, num_end - start));
  if (!numerator.empty() && numerator[0] == '+') numerator.erase(0, 1);
  pos = num_end;
  std::string denominator = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_end = scan_digits(text, pos);
    if (den_end == pos) throw ParseError("expected integer denominator", pos);
    denominator = std::string(text.substr(pos, den_end - pos));
    if (mpz_class(denominator) == 0) throw ParseError("zero denominator", pos);
    pos = den_end;
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("unexpected character in rational", pos);
  Rational q{mpz_class(numerator), mpz_class(denominator)};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational rational_abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double ComplexRational::abs() const { return std::hypot(re_.get_d(), im_.get_d()); }

ComplexRational ComplexRational::inverse() const {
  const Rational n = norm2();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero complex rational");
  return {re_ / n, -im_ / n};
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_string(const ComplexRational& z) {
  if (z.is_real()) return to_string(z.re());
  if (sgn(z.re()) == 0) return to_string(z.im()) + "*i";
  std::string out = to_string(z.re());
  if (sgn(z.im()) > 0) out += "+";
  return out + to_string(z.im()) + "*i";
}

}  // namespace ifs_cstar
