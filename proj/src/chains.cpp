#include "ifs_cstar/chains.hpp"

#include "ifs_cstar/errors.hpp"
#include "ifs_cstar/linalg.hpp"

namespace ifs_cstar {

namespace {

Chain chain_from(const OrbitBasis& basis, std::size_t base, const IndexWord& w) {
  const std::size_t n = w.size();
  Chain c;
  c.witness = w;
  c.indices.assign(n + 1, base);
  std::size_t at = base;
  for (std::size_t i = 1; i <= n; ++i) {
    auto next = basis.child(at, w[n - i]);
    if (!next) throw InternalError("chain leaves the basis");
    at = *next;
    c.indices[n - i] = at;
  }
  for (auto idx : c.indices) c.points.push_back(basis.point(idx));
  return c;
}

Rational real_value(const ComplexRational& z) {
  if (!z.is_real()) throw InternalError("monomial evaluated to a non-real value");
  return z.re();
}

}  // namespace

std::vector<Chain> enumerate_chains(const OrbitBasis& basis, std::size_t n) {
  if (n > static_cast<std::size_t>(basis.depth()))
    throw ConfigError("chain length " + std::to_string(n) + " exceeds basis depth " + std::to_string(basis.depth()));
  const auto words = IndexWord::all_of_length(n, basis.alphabet());
  std::vector<Chain> out;
  for (std::size_t x = 0; x < basis.size(); ++x) {
    if (basis.depth_of(x) + n > static_cast<std::size_t>(basis.depth())) continue;
    for (const auto& w : words) out.push_back(chain_from(basis, x, w));
  }
  return out;
}

std::vector<Bichain> enumerate_bichains(const OrbitBasis& basis, std::size_t m, std::size_t n) {
  const std::size_t top = std::max(m, n);
  if (top > static_cast<std::size_t>(basis.depth()))
    throw ConfigError("bichain length exceeds basis depth " + std::to_string(basis.depth()));
  const auto left_words = IndexWord::all_of_length(m, basis.alphabet());
  const auto right_words = IndexWord::all_of_length(n, basis.alphabet());
  std::vector<Bichain> out;
  for (std::size_t x = 0; x < basis.size(); ++x) {
    if (basis.depth_of(x) + top > static_cast<std::size_t>(basis.depth())) continue;
    for (const auto& j : left_words)
      for (const auto& k : right_words) out.push_back({chain_from(basis, x, j), chain_from(basis, x, k)});
  }
  return out;
}

bool chain_consistent(const AffineIfs& ifs, const Chain& c) {
  const std::size_t n = c.length();
  if (c.points.size() != n + 1) return false;
  for (std::size_t i = 1; i <= n; ++i)
    if (!(ifs.map(c.witness[n - i])(c.points[n - i + 1]) == c.points[n - i])) return false;
  return true;
}

ComplexRational evaluate(const ChainFn& f, const Chain& c) { return f.evaluate(c.points); }

ComplexRational evaluate(const BichainFn& f, const Bichain& b) { return f.evaluate(b.left.points, b.right.points); }

RankComparison boxdot_span_ranks(const OrbitBasis& basis, std::size_t m, std::size_t n, unsigned factor_degree) {
  const std::size_t d = basis.ifs().dim();
  const auto chains = enumerate_chains(basis, m + n);
  const auto left = monomials_up_to((m + 1) * d, factor_degree);
  const auto right = monomials_up_to((n + 1) * d, factor_degree);
  const auto full = monomials_up_to((m + n + 1) * d, 2 * factor_degree);

  std::vector<std::vector<Rational>> products;
  for (const auto& p : left)
    for (const auto& q : right) {
      const ChainFn fp(m, d, Polynomial::monomial(p));
      const ChainFn fq(n, d, Polynomial::monomial(q));
      const ChainFn prod = boxdot(fp, fq);
      std::vector<Rational> row;
      for (const auto& c : chains) row.push_back(real_value(evaluate(prod, c)));
      products.push_back(std::move(row));
    }
  std::vector<std::vector<Rational>> all;
  for (const auto& mono : full) {
    const ChainFn f(m + n, d, Polynomial::monomial(mono));
    std::vector<Rational> row;
    for (const auto& c : chains) row.push_back(real_value(evaluate(f, c)));
    all.push_back(std::move(row));
  }
  return {exact_rank(std::move(products)), exact_rank(std::move(all)), chains.size()};
}

RankComparison boxtimes_span_ranks(const OrbitBasis& basis, std::size_t m, std::size_t n, unsigned factor_degree) {
  const std::size_t d = basis.ifs().dim();
  const auto bichains = enumerate_bichains(basis, m, n);
  const auto left = monomials_up_to((m + 1) * d, factor_degree);
  const auto right = monomials_up_to((n + 1) * d, factor_degree);
  const auto full = monomials_up_to((m + n + 2) * d, 2 * factor_degree);

  std::vector<std::vector<Rational>> products;
  for (const auto& p : left)
    for (const auto& q : right) {
      const BichainFn prod = boxtimes(ChainFn(m, d, Polynomial::monomial(p)), ChainFn(n, d, Polynomial::monomial(q)));
      std::vector<Rational> row;
      for (const auto& b : bichains) row.push_back(real_value(evaluate(prod, b)));
      products.push_back(std::move(row));
    }
  std::vector<std::vector<Rational>> all;
  for (const auto& mono : full) {
    const BichainFn f(m, n, d, Polynomial::monomial(mono));
    std::vector<Rational> row;
    for (const auto& b : bichains) row.push_back(real_value(evaluate(f, b)));
    all.push_back(std::move(row));
  }
  return {exact_rank(std::move(products)), exact_rank(std::move(all)), bichains.size()};
}

}  // namespace ifs_cstar
