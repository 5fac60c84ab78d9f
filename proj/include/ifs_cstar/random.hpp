#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "ifs_cstar/chain_fn.hpp"

namespace ifs_cstar {

// mt19937_64 with bounded draws done by rejection, so sequences do not depend
// on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

// p/q with |p| <= max_abs_num and 1 <= q <= max_den.
Rational random_rational(Rng& rng, std::int64_t max_abs_num, std::int64_t max_den);
// Small coefficients, imaginary part zero about half the time.
ComplexRational random_coefficient(Rng& rng);
Polynomial random_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, std::size_t max_terms = 4);
ChainFn random_chain_fn(Rng& rng, std::size_t length, std::size_t dim, unsigned max_degree);
BichainFn random_bichain_fn(Rng& rng, std::size_t left_length, std::size_t right_length, std::size_t dim,
                            unsigned max_degree);

}  // namespace ifs_cstar
