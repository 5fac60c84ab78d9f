#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ifs_cstar/affine.hpp"
#include "ifs_cstar/space.hpp"
#include "ifs_cstar/word.hpp"

namespace ifs_cstar {

// A finite family of exact affine self-maps of a described compact space,
// with an optional candidate open set. Immutable once constructed.
class AffineIfs {
 public:
  // Validates N >= 1, matching dimensions, and that each map sends the space
  // into itself. Throws ConfigError otherwise.
  AffineIfs(SpaceDescriptor space, std::vector<AffineMap> maps, std::optional<OpenSetSpec> open_set = std::nullopt);

  const SpaceDescriptor& space() const { return space_; }
  const std::vector<AffineMap>& maps() const { return maps_; }
  const std::optional<OpenSetSpec>& open_set() const { return open_set_; }
  int size() const { return static_cast<int>(maps_.size()); }
  std::size_t dim() const { return maps_.front().dim(); }

  // 1-based; out-of-range letters throw ConfigError.
  const AffineMap& map(int k) const;

 private:
  SpaceDescriptor space_;
  std::vector<AffineMap> maps_;
  std::optional<OpenSetSpec> open_set_;
};

Point apply_word(const AffineIfs& ifs, const IndexWord& w, const Point& x);
AffineMap compose_word(const AffineIfs& ifs, const IndexWord& w);

// Unique solution of gamma_w(x) = x. Throws FixedSetNotPoint when I - linear
// is singular (empty fixed set or a positive-dimensional one).
Point word_fixed_point(const AffineIfs& ifs, const IndexWord& w);

struct LipschitzBounds {
  double low = 0;
  double high = 0;
  bool proper = false;           // high < 1, decided exactly in one dimension
  std::optional<Rational> exact;  // |a| for one-dimensional maps
};

LipschitzBounds contraction_bounds(const AffineMap& m);

// For a map of [0,1] of the form x -> +-3^-k x + b that carries the Cantor set
// onto one of its level-k cells, that cell; nullopt otherwise.
std::optional<ClosedInterval> cantor_image_cell(const AffineMap& m);

}  // namespace ifs_cstar
