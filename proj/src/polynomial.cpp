#include "ifs_cstar/polynomial.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "ifs_cstar/errors.hpp"

namespace ifs_cstar {

Polynomial Polynomial::constant(std::size_t nvars, const ComplexRational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("polynomial variable index");
  Monomial m(nvars, 0);
  m[index] = 1;
  Polynomial p(nvars);
  p.add_term(m, ComplexRational(1));
  return p;
}

Polynomial Polynomial::monomial(const Monomial& exponents, const ComplexRational& c) {
  Polynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

unsigned Polynomial::total_degree() const {
  unsigned deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, std::accumulate(m.begin(), m.end(), 0u));
  return deg;
}

void Polynomial::add_term(const Monomial& exponents, const ComplexRational& c) {
  if (exponents.size() != nvars_) throw std::invalid_argument("monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw ArityError("polynomials in different variable sets");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  check_ring(o);
  Polynomial out(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  return *this = std::move(out);
}

Polynomial& Polynomial::operator*=(const ComplexRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::conj() const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial out = constant(nvars_, ComplexRational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) out *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return out;
}

ComplexRational Polynomial::evaluate(std::span<const Rational> values) const {
  if (values.size() != nvars_) throw ArityError("evaluation point has wrong number of coordinates");
  ComplexRational sum;
  std::vector<std::vector<Rational>> powers(nvars_);
  for (const auto& [m, c] : terms_) {
    Rational prod = 1;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Rational(1));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * values[i]);
      prod *= cache[m[i]];
    }
    sum += c * ComplexRational(prod);
  }
  return sum;
}

Polynomial Polynomial::remap(const std::vector<std::size_t>& mapping, std::size_t nvars) const {
  if (mapping.size() != nvars_) throw ArityError("variable mapping has wrong length");
  Polynomial out(nvars);
  for (const auto& [m, c] : terms_) {
    Monomial target(nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (mapping[i] >= nvars) throw ArityError("variable mapping out of range");
      target[mapping[i]] += m[i];
    }
    out.add_term(target, c);
  }
  return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_) throw ArityError("substitution has wrong number of images");
  const std::size_t target = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != target) throw ArityError("substitution images in different rings");
  Polynomial out(target);
  std::vector<std::vector<Polynomial>> powers(nvars_);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, ComplexRational(1)));
      while (cache.size() <= m[i]) cache.push_back(cache.back() * images[i]);
      term *= cache[m[i]];
    }
    out += term;
  }
  return out;
}

namespace {

std::string coefficient_string(const ComplexRational& c) {
  if (c.is_real()) return to_string(c.re());
  if (sgn(c.re()) == 0) return to_string(c.im()) + "*i";
  return "(" + to_string(c) + ")";
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, const VariableResolver& resolve)
      : text_(text), nvars_(nvars), resolve_(resolve) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected character in polynomial", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc(nvars_);
    bool negate = false;
    skip_ws();
    if (accept('-')) negate = true;
    else accept('+');
    acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc *= power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = factor();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected non-negative integer exponent", pos_);
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 64) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of polynomial", pos_);
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (ch == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t den_start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den_start == pos_) throw ParseError("expected denominator", pos_);
      }
      Rational value;
      try {
        value = parse_rational(text_.substr(start, pos_ - start));
      } catch (const ParseError&) {
        throw ParseError("malformed rational literal", start);
      }
      return Polynomial::constant(nvars_, ComplexRational(value));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "i") return Polynomial::constant(nvars_, ComplexRational::i());
      const auto index = resolve_(name);
      if (!index || *index >= nvars_) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(nvars_, *index);
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
  }

  std::string_view text_;
  std::size_t nvars_;
  const VariableResolver& resolve_;
  std::size_t pos_ = 0;
};

void monomials_rec(std::size_t var, unsigned remaining, Monomial& current, std::vector<Monomial>& out) {
  if (var == current.size()) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    current[var] = e;
    monomials_rec(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::string to_string(const Polynomial& p, const VariableNamer& name) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += name(i);
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    std::string coef = coefficient_string(c);
    std::string piece;
    if (factors.empty()) piece = coef;
    else if (coef == "1") piece = factors;
    else if (coef == "-1") piece = "-" + factors;
    else piece = coef + "*" + factors;
    if (!first) out += (piece[0] == '-') ? " - " + piece.substr(1) : " + " + piece;
    else out = piece;
    first = false;
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, std::size_t nvars, const VariableResolver& resolve) {
  return Parser(text, nvars, resolve).parse();
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<Monomial> out;
  for (unsigned deg = 0; deg <= max_degree; ++deg) {
    std::vector<Monomial> all;
    Monomial current(nvars, 0);
    monomials_rec(0, deg, current, all);
    for (auto& m : all)
      if (std::accumulate(m.begin(), m.end(), 0u) == deg) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace ifs_cstar
