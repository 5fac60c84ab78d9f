#include "ifs_cstar/random.hpp"

#include <limits>
#include <stdexcept>

namespace ifs_cstar {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational random_rational(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den) {
  const auto p = rng.between(-max_abs_num, max_abs_num);
  const auto q = rng.between(1, max_den);
  Rational r{mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q))};
  r.canonicalize();
  return r;
}

ComplexRational random_coefficient(Rng& rng) {
  Rational re = random_rational(rng, 3, 4);
  Rational im = rng.coin() ? random_rational(rng, 3, 4) : Rational(0);
  if (sgn(re) == 0 && sgn(im) == 0) re = 1;
  return {re, im};
}

Polynomial random_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms) {
  const auto monomials = monomials_up_to(nvars, max_degree);
  Polynomial p(nvars);
  const auto terms = rng.between(1, static_cast<std::int64_t>(max_terms));
  for (std::int64_t t = 0; t < terms; ++t)
    p.add_term(monomials[rng.below(monomials.size())], random_coefficient(rng));
  if (p.is_zero()) p.add_term(Monomial(nvars, 0), ComplexRational(1));
  return p;
}

ChainFn random_chain_fn(Rng& rng, std::size_t length, std::size_t dim, unsigned max_degree) {
  return {length, dim, random_polynomial(rng, (length + 1) * dim, max_degree)};
}

BichainFn random_bichain_fn(Rng& rng, std::size_t left_length, std::size_t right_length, std::size_t dim,
                            unsigned max_degree) {
  return {left_length, right_length, dim, random_polynomial(rng, (left_length + right_length + 2) * dim, max_degree)};
}

}  // namespace ifs_cstar
