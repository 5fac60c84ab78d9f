#pragma once

#include <cstddef>
#include <vector>

#include "ifs_cstar/chain_fn.hpp"
#include "ifs_cstar/orbit_basis.hpp"

namespace ifs_cstar {

// (x_n, ..., x_0) with x_i = gamma_{k_i}(x_{i-1}) for witness = (k_n, ..., k_1).
struct Chain {
  std::vector<Point> points;
  IndexWord witness;
  std::vector<std::size_t> indices;  // basis indices, same order as points
  std::size_t length() const { return witness.size(); }
  const std::size_t& base() const { return indices.back(); }
};

struct Bichain {
  Chain left;
  Chain right;
};

// All gamma_w(x) for basis points x of depth <= D - n and w of length n.
// Throws ConfigError when n exceeds the basis depth.
std::vector<Chain> enumerate_chains(const OrbitBasis& basis, std::size_t n);
// Pairs of chains of lengths m and n over a common base point.
std::vector<Bichain> enumerate_bichains(const OrbitBasis& basis, std::size_t m, std::size_t n);

// Recomputes the points from the witness word and the base point.
bool chain_consistent(const AffineIfs& ifs, const Chain& c);

ComplexRational evaluate(const ChainFn& f, const Chain& c);
ComplexRational evaluate(const BichainFn& f, const Bichain& b);

struct RankComparison {
  std::size_t product_rank = 0;
  std::size_t full_rank = 0;
  std::size_t samples = 0;
};

// Rank of the evaluation matrix of all monomial products p [.] q (p on X_m,
// q on X_n, degrees <= factor_degree) on the enumerated X_{m+n} chains,
// against that of all monomials of degree <= 2 * factor_degree.
RankComparison boxdot_span_ranks(const OrbitBasis& basis, std::size_t m, std::size_t n, unsigned factor_degree);
// The same for p [x] q on the enumerated X_{m,n} bichains.
RankComparison boxtimes_span_ranks(const OrbitBasis& basis, std::size_t m, std::size_t n, unsigned factor_degree);

}  // namespace ifs_cstar
