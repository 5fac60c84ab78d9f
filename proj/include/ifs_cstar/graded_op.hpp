#pragma once

#include <map>
#include <vector>

#include "ifs_cstar/sparse_op.hpp"

namespace ifs_cstar {

// Finite sum of degree-labelled operators, sum_k a_k (x) u^k.
class GradedOp {
 public:
  explicit GradedOp(BasisPtr basis) : basis_(std::move(basis)) {}

  const BasisPtr& basis() const { return basis_; }
  const std::map<int, SparseOp>& components() const { return components_; }
  // Adds into the degree-k component (validity intersects).
  void add(int degree, const SparseOp& a);
  // Degrees carrying a nonzero component.
  std::vector<int> support() const;

 private:
  BasisPtr basis_;
  std::map<int, SparseOp> components_;
};

GradedOp graded_multiply(const GradedOp& a, const GradedOp& b);
GradedOp graded_adjoint(const GradedOp& a);
GradedOp graded_expectation(const GradedOp& a);

}  // namespace ifs_cstar
