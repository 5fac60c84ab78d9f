#pragma once

#include "ifs_cstar/sparse_op.hpp"

namespace ifs_cstar {

struct NormEstimate {
  double estimate = 0;     // max of the power-iteration value and lower_bound
  double lower_bound = 0;  // largest column 2-norm, a certified lower bound
  int iterations = 0;
};

// Largest singular value of the valid-column part of a, by power iteration
// on a*a from the normalised all-ones vector. Stops after `iterations` steps
// or once the relative change drops below tol.
NormEstimate op_norm_estimate(const SparseOp& a, int iterations = 200, double tol = 1e-12);

}  // namespace ifs_cstar
