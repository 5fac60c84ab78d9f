#include "ifs_cstar/norm.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace ifs_cstar {

NormEstimate op_norm_estimate(const SparseOp& a, int iterations, double tol) {
  if (iterations < 1) throw std::invalid_argument("iterations must be at least 1");
  using C = std::complex<double>;
  struct Entry {
    std::size_t row;
    std::size_t col;
    C value;
  };
  std::vector<Entry> entries;
  NormEstimate out;
  const std::size_t n = a.size();
  std::vector<bool> active(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    if (!a.valid_column(c)) continue;
    active[c] = true;
    double col2 = 0;
    for (const auto& [r, v] : a.column(c)) {
      const C z(to_double(v.re()), to_double(v.im()));
      entries.push_back({r, c, z});
      col2 += std::norm(z);
    }
    out.lower_bound = std::max(out.lower_bound, std::sqrt(col2));
  }
  if (entries.empty()) return out;

  std::vector<C> v(n, 0.0);
  std::size_t count = 0;
  for (std::size_t c = 0; c < n; ++c) count += active[c] ? 1 : 0;
  for (std::size_t c = 0; c < n; ++c)
    if (active[c]) v[c] = 1.0 / std::sqrt(static_cast<double>(count));

  double lambda = 0;
  std::vector<C> av(n);
  std::vector<C> w(n);
  for (int it = 1; it <= iterations; ++it) {
    std::fill(av.begin(), av.end(), C(0));
    for (const auto& e : entries) av[e.row] += e.value * v[e.col];
    std::fill(w.begin(), w.end(), C(0));
    for (const auto& e : entries) w[e.col] += std::conj(e.value) * av[e.row];
    double norm2 = 0;
    for (const auto& z : w) norm2 += std::norm(z);
    const double next = std::sqrt(norm2);  // ||a*a v|| with ||v|| = 1
    out.iterations = it;
    if (next == 0) {
      lambda = 0;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / next;
    const bool done = lambda > 0 && std::abs(next - lambda) <= tol * next;
    lambda = next;
    if (done) break;
  }
  out.estimate = std::max(std::sqrt(lambda), out.lower_bound);
  return out;
}

}  // namespace ifs_cstar
