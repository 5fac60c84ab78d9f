#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ifs_cstar/chains.hpp"
#include "ifs_cstar/sparse_op.hpp"

namespace ifs_cstar {

// rho_n(f) e_x = sum over words w of length n of f(chain gamma_w(x)) e_{gamma_w(x)}.
// rho_0 is the diagonal action of C(X); rho_1 that of the graph module.
SparseOp rho_n(const BasisPtr& basis, std::size_t n, const ChainFn& f);
inline SparseOp rho_0(const BasisPtr& basis, const PolyFn& a) { return rho_n(basis, 0, a); }

// rho_{m,n}(f) e_y: y = gamma_k(x) with |k| = n read off the witness word,
// entries f(gamma_j(x), gamma_k(x)) at rows gamma_j(x), |j| = m. Columns
// whose word is shorter than n are zero.
SparseOp rho_mn(const BasisPtr& basis, std::size_t m, std::size_t n, const BichainFn& f);

// rho_1(f) keeping only the entries of branch k.
SparseOp rho_branch(const BasisPtr& basis, int k, const ChainFn& f);

// k-th entry function: the (gamma_j(x), x)-entry for each x of depth <= D - k
// and each word j of length k (row = image).
using EntryTable = std::map<std::pair<std::size_t, IndexWord>, ComplexRational>;
EntryTable entry_function(const SparseOp& a, std::size_t k);

// <f, g>(y) = sum_k conj f(gamma_k(y), y) g(gamma_k(y), y).
PolyFn inner_product_fn(const AffineIfs& ifs, const ChainFn& f, const ChainFn& g);

// Branch restrictions of f, one per map. Throws NotSeparatedError unless the
// graphs of the maps are pairwise disjoint.
struct BranchPart {
  int branch;
  ChainFn f;
};
std::vector<BranchPart> split_by_branch(const AffineIfs& ifs, const ChainFn& f);

// Whether (row, col) equals (gamma_j(x), gamma_k(x)) for some basis point x
// and words with |j| = m, |k| = n.
bool witnessed_pair(const OrbitBasis& basis, std::size_t row, std::size_t col, std::size_t m, std::size_t n);

}  // namespace ifs_cstar
