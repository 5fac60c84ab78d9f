#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "ifs_cstar/ifs.hpp"

namespace ifs_cstar {

struct BasisPoint {
  Point point;
  std::size_t seed = 0;
  IndexWord word;  // point = gamma_word(seeds[seed])
  std::size_t depth() const { return word.size(); }
};

// The points gamma_w(s) for refined seeds s and |w| <= depth, indexed in
// breadth-first order per seed (children in letter order).
class OrbitBasis {
 public:
  // Throws NoAdmissibleSeeds on an empty seed list, CollisionError when two
  // (seed, word) pairs give the same point, and ConfigError when a seed fails
  // refinement at depth 2 * depth.
  static std::shared_ptr<const OrbitBasis> build(const AffineIfs& ifs, std::vector<Point> seeds, int depth);

  const AffineIfs& ifs() const { return ifs_; }
  const std::vector<Point>& seeds() const { return seeds_; }
  int depth() const { return depth_; }
  int alphabet() const { return ifs_.size(); }
  std::size_t size() const { return points_.size(); }

  const BasisPoint& at(std::size_t i) const { return points_[i]; }
  const Point& point(std::size_t i) const { return points_[i].point; }
  std::size_t depth_of(std::size_t i) const { return points_[i].depth(); }

  std::optional<std::size_t> index_of(const Point& p) const;
  // Index of gamma_k(point i); nullopt at the depth frontier.
  std::optional<std::size_t> child(std::size_t i, int k) const;
  // Index of gamma_w(point i) (last letter applied first).
  std::optional<std::size_t> image(std::size_t i, const IndexWord& w) const;
  // The point obtained by dropping the n outermost letters of the witness word.
  std::optional<std::size_t> strip(std::size_t i, std::size_t n) const;

 private:
  OrbitBasis(const AffineIfs& ifs, std::vector<Point> seeds, int depth) : ifs_(ifs), seeds_(std::move(seeds)), depth_(depth) {}

  AffineIfs ifs_;
  std::vector<Point> seeds_;
  int depth_;
  std::vector<BasisPoint> points_;
  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::map<Point, std::size_t> index_;
};

using BasisPtr = std::shared_ptr<const OrbitBasis>;

}  // namespace ifs_cstar
