#include "ifs_cstar/orbit_basis.hpp"

#include "ifs_cstar/conditions.hpp"
#include "ifs_cstar/errors.hpp"

namespace ifs_cstar {

std::shared_ptr<const OrbitBasis> OrbitBasis::build(const AffineIfs& ifs, std::vector<Point> seeds, int depth) {
  if (seeds.empty()) throw NoAdmissibleSeeds();
  if (depth < 0) throw ConfigError("basis depth must be non-negative");
  std::shared_ptr<OrbitBasis> basis(new OrbitBasis(ifs, std::move(seeds), depth));
  const auto n = static_cast<std::size_t>(ifs.size());

  for (std::size_t s = 0; s < basis->seeds_.size(); ++s) {
    std::size_t head = basis->points_.size();
    auto insert = [&](Point p, IndexWord w, std::optional<std::size_t> parent) {
      auto [it, inserted] = basis->index_.emplace(p, basis->points_.size());
      if (!inserted) {
        const BasisPoint& other = basis->points_[it->second];
        throw CollisionError("gamma_" + to_string(w) + "(" + to_string(basis->seeds_[s]) + ") = gamma_" +
                             to_string(other.word) + "(" + to_string(basis->seeds_[other.seed]) + ") = " +
                             to_string(p) + "; refine the seed set first");
      }
      basis->points_.push_back({std::move(p), s, std::move(w)});
      basis->parent_.push_back(parent);
      basis->children_.emplace_back();
    };
    insert(basis->seeds_[s], IndexWord{}, std::nullopt);
    for (; head < basis->points_.size(); ++head) {
      if (basis->points_[head].depth() >= static_cast<std::size_t>(depth)) continue;
      for (std::size_t k = 1; k <= n; ++k) {
        const BasisPoint& from = basis->points_[head];
        Point p = ifs.maps()[k - 1](from.point);
        IndexWord w = IndexWord{static_cast<int>(k)} * from.word;
        insert(std::move(p), std::move(w), head);
        basis->children_[head].push_back(basis->points_.size() - 1);
      }
    }
  }

  const SeedRefinement check = scan_seed_set(ifs, basis->seeds_, 2 * depth);
  if (!check.removed.empty())
    throw ConfigError("seed " + to_string(check.removed.front().seed) + " fails refinement at depth " +
                      std::to_string(2 * depth) + ": " + check.removed.front().reason);
  return basis;
}

std::optional<std::size_t> OrbitBasis::index_of(const Point& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> OrbitBasis::child(std::size_t i, int k) const {
  if (k < 1 || k > alphabet()) throw ConfigError("map index out of range");
  const auto& c = children_[i];
  if (c.empty()) return std::nullopt;
  return c[static_cast<std::size_t>(k - 1)];
}

std::optional<std::size_t> OrbitBasis::image(std::size_t i, const IndexWord& w) const {
  std::optional<std::size_t> at = i;
  for (std::size_t pos = w.size(); pos-- > 0 && at;) at = child(*at, w[pos]);
  return at;
}

std::optional<std::size_t> OrbitBasis::strip(std::size_t i, std::size_t n) const {
  std::optional<std::size_t> at = i;
  for (std::size_t step = 0; step < n && at; ++step) at = parent_[*at];
  return at;
}

}  // namespace ifs_cstar
