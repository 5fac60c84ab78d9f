#include "ifs_cstar/graded_op.hpp"

#include "ifs_cstar/errors.hpp"

namespace ifs_cstar {

void GradedOp::add(int degree, const SparseOp& a) {
  if (a.basis() != basis_) throw BasisMismatch();
  auto it = components_.find(degree);
  if (it == components_.end())
    components_.emplace(degree, a);
  else
    it->second = it->second + a;
}

std::vector<int> GradedOp::support() const {
  std::vector<int> out;
  for (const auto& [k, a] : components_)
    if (!a.is_zero()) out.push_back(k);
  return out;
}

GradedOp graded_multiply(const GradedOp& a, const GradedOp& b) {
  if (a.basis() != b.basis()) throw BasisMismatch();
  GradedOp out(a.basis());
  for (const auto& [i, x] : a.components())
    for (const auto& [j, y] : b.components()) out.add(i + j, x * y);
  return out;
}

GradedOp graded_adjoint(const GradedOp& a) {
  GradedOp out(a.basis());
  for (const auto& [k, x] : a.components()) out.add(-k, x.adjoint());
  return out;
}

GradedOp graded_expectation(const GradedOp& a) {
  GradedOp out(a.basis());
  for (const auto& [k, x] : a.components()) out.add(k, diag_expectation(x));
  return out;
}

}  // namespace ifs_cstar
