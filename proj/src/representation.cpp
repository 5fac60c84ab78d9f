#include "ifs_cstar/representation.hpp"

#include "ifs_cstar/conditions.hpp"
#include "ifs_cstar/errors.hpp"

namespace ifs_cstar {

namespace {

void check_depth(const OrbitBasis& basis, std::size_t n) {
  if (n > static_cast<std::size_t>(basis.depth()))
    throw ConfigError("operator degree " + std::to_string(n) + " exceeds basis depth " + std::to_string(basis.depth()));
}

void check_dim(const OrbitBasis& basis, std::size_t dim) {
  if (dim != basis.ifs().dim()) throw ArityError("function dimension does not match the system");
}

std::vector<Point> chain_points(const OrbitBasis& basis, std::size_t base, const IndexWord& w) {
  const std::size_t n = w.size();
  std::vector<Point> pts(n + 1);
  std::size_t at = base;
  pts[n] = basis.point(at);
  for (std::size_t i = 1; i <= n; ++i) {
    at = *basis.child(at, w[n - i]);
    pts[n - i] = basis.point(at);
  }
  return pts;
}

SparseOp rho_1_filtered(const BasisPtr& basis, const ChainFn& f, int only_branch) {
  if (f.length() != 1) throw ArityError("graph-module function must have length 1");
  check_dim(*basis, f.dim());
  check_depth(*basis, 1);
  SparseOp out(basis);
  const auto D = static_cast<std::size_t>(basis->depth());
  for (std::size_t x = 0; x < basis->size(); ++x) {
    const bool valid = basis->depth_of(x) + 1 <= D;
    out.set_valid_column(x, valid);
    out.set_valid_row(x, basis->depth_of(x) >= 1);
    if (!valid) continue;
    for (int k = 1; k <= basis->alphabet(); ++k) {
      if (only_branch != 0 && k != only_branch) continue;
      const std::size_t y = *basis->child(x, k);
      const Point pts[2] = {basis->point(y), basis->point(x)};
      out.set(y, x, f.evaluate(pts));
    }
  }
  return out;
}

}  // namespace

SparseOp rho_n(const BasisPtr& basis, std::size_t n, const ChainFn& f) {
  if (f.length() != n) throw ArityError("function length does not match operator degree");
  check_dim(*basis, f.dim());
  check_depth(*basis, n);
  SparseOp out(basis);
  const auto D = static_cast<std::size_t>(basis->depth());
  const auto words = IndexWord::all_of_length(n, basis->alphabet());
  for (std::size_t x = 0; x < basis->size(); ++x) {
    const bool valid = basis->depth_of(x) + n <= D;
    out.set_valid_column(x, valid);
    out.set_valid_row(x, basis->depth_of(x) >= n);
    if (!valid) continue;
    for (const auto& w : words) {
      const auto pts = chain_points(*basis, x, w);
      out.set(*basis->image(x, w), x, f.evaluate(pts));
    }
  }
  return out;
}

SparseOp rho_mn(const BasisPtr& basis, std::size_t m, std::size_t n, const BichainFn& f) {
  if (f.left_length() != m || f.right_length() != n) throw ArityError("bichain function arities do not match");
  check_dim(*basis, f.dim());
  check_depth(*basis, std::max(m, n));
  SparseOp out(basis);
  const auto D = static_cast<std::size_t>(basis->depth());
  const auto left_words = IndexWord::all_of_length(m, basis->alphabet());
  for (std::size_t y = 0; y < basis->size(); ++y) {
    const std::size_t len = basis->depth_of(y);
    out.set_valid_row(y, len >= m && len - m + n <= D);
    const bool valid = len >= n && len - n + m <= D;
    out.set_valid_column(y, valid);
    if (!valid) continue;
    const std::size_t x = *basis->strip(y, n);
    const auto right = chain_points(*basis, x, basis->at(y).word.outer(n));
    for (const auto& j : left_words) {
      const auto left = chain_points(*basis, x, j);
      out.set(*basis->image(x, j), y, f.evaluate(left, right));
    }
  }
  return out;
}

SparseOp rho_branch(const BasisPtr& basis, int k, const ChainFn& f) {
  if (k < 1 || k > basis->alphabet()) throw ConfigError("branch index out of range");
  return rho_1_filtered(basis, f, k);
}

EntryTable entry_function(const SparseOp& a, std::size_t k) {
  const OrbitBasis& basis = *a.basis();
  EntryTable out;
  const auto D = static_cast<std::size_t>(basis.depth());
  if (k > D) return out;
  const auto words = IndexWord::all_of_length(k, basis.alphabet());
  for (std::size_t x = 0; x < basis.size(); ++x) {
    if (basis.depth_of(x) + k > D) continue;
    for (const auto& j : words) out.emplace(std::make_pair(x, j), a.get(*basis.image(x, j), x));
  }
  return out;
}

PolyFn inner_product_fn(const AffineIfs& ifs, const ChainFn& f, const ChainFn& g) {
  if (f.length() != 1 || g.length() != 1) throw ArityError("inner product takes functions on the graph");
  const std::size_t d = ifs.dim();
  if (f.dim() != d || g.dim() != d) throw ArityError("function dimension does not match the system");
  Polynomial total(d);
  for (const auto& m : ifs.maps()) {
    // t1 -> gamma_k(y), t0 -> y, with y in variables 0..d-1.
    std::vector<Polynomial> images(2 * d, Polynomial(d));
    for (std::size_t c = 0; c < d; ++c) {
      Polynomial row = Polynomial::constant(d, ComplexRational(m.offset()[c]));
      for (std::size_t e = 0; e < d; ++e)
        if (sgn(m.linear()(c, e)) != 0)
          row += Polynomial::variable(d, e) * ComplexRational(m.linear()(c, e));
      images[ChainFn::variable(1, c, d)] = row;
      images[ChainFn::variable(0, c, d)] = Polynomial::variable(d, c);
    }
    total += f.poly().conj().substitute(images) * g.poly().substitute(images);
  }
  return {0, d, total};
}

std::vector<BranchPart> split_by_branch(const AffineIfs& ifs, const ChainFn& f) {
  if (f.length() != 1) throw ArityError("graph-module function must have length 1");
  const ConditionResult sep = check_graph_separation(ifs);
  if (sep.holds != Tri::yes) {
    std::string where;
    if (!sep.witness_points.empty()) where = " (maps agree at " + to_string(sep.witness_points.front()) + ")";
    throw NotSeparatedError("graphs of the maps are not separated" + where);
  }
  std::vector<BranchPart> out;
  for (int k = 1; k <= ifs.size(); ++k) out.push_back({k, f});
  return out;
}

bool witnessed_pair(const OrbitBasis& basis, std::size_t row, std::size_t col, std::size_t m, std::size_t n) {
  const BasisPoint& r = basis.at(row);
  const BasisPoint& c = basis.at(col);
  if (r.seed != c.seed || r.depth() < m || c.depth() < n) return false;
  if (r.depth() - m != c.depth() - n) return false;
  if (!(r.word.strip(m) == c.word.strip(n))) return false;
  const std::size_t x = *basis.strip(row, m);
  const Point& base = basis.point(x);
  return apply_word(basis.ifs(), r.word.outer(m), base) == r.point &&
         apply_word(basis.ifs(), c.word.outer(n), base) == c.point;
}

}  // namespace ifs_cstar
