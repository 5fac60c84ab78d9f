#include "ifs_cstar/ifs.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "ifs_cstar/errors.hpp"

namespace ifs_cstar {

namespace {

void check_maps_into_space(const SpaceDescriptor& space, const std::vector<AffineMap>& maps) {
  if (const auto* box = std::get_if<BoxSpace>(&space)) {
    for (const auto& s : box->sides)
      if (s.lo > s.hi) throw ConfigError("box side with lo > hi");
    for (std::size_t k = 0; k < maps.size(); ++k)
      for (const auto& v : box->vertices())
        if (!space_contains(space, maps[k](v)))
          throw ConfigError("map " + std::to_string(k + 1) + " sends vertex " + to_string(v) + " outside the space");
  } else if (std::holds_alternative<CantorSpace>(space)) {
    for (std::size_t k = 0; k < maps.size(); ++k)
      if (!cantor_image_cell(maps[k]))
        throw ConfigError("map " + std::to_string(k + 1) +
                          " is not a cell-aligned similarity of the Cantor set (x -> +-3^-k x + b onto a level-k cell)");
  } else {
    for (std::size_t k = 0; k < maps.size(); ++k)
      if (!contraction_bounds(maps[k]).proper)
        throw ConfigError("attractor spaces require proper contractions (map " + std::to_string(k + 1) + ")");
  }
}

}  // namespace

AffineIfs::AffineIfs(SpaceDescriptor space, std::vector<AffineMap> maps, std::optional<OpenSetSpec> open_set)
    : space_(std::move(space)), maps_(std::move(maps)), open_set_(std::move(open_set)) {
  if (maps_.empty()) throw ConfigError("an iterated function system needs at least one map");
  const std::size_t d = maps_.front().dim();
  if (d == 0) throw ConfigError("zero-dimensional maps");
  for (const auto& m : maps_)
    if (m.dim() != d) throw ConfigError("maps of different dimensions");
  if (auto* a = std::get_if<AttractorSpace>(&space_)) {
    if (a->generators.empty()) a->generators = maps_;
    if (!(a->tolerance > 0)) throw ConfigError("attractor tolerance must be positive");
  }
  if (space_dimension(space_) != d) throw ConfigError("space dimension does not match the maps");
  if (open_set_)
    for (const auto& b : open_set_->boxes)
      if (b.sides.size() != d) throw ConfigError("open set dimension does not match the maps");
  check_maps_into_space(space_, maps_);
}

const AffineMap& AffineIfs::map(int k) const {
  if (k < 1 || k > size())
    throw ConfigError("index " + std::to_string(k) + " out of range 1.." + std::to_string(size()));
  return maps_[static_cast<std::size_t>(k - 1)];
}

Point apply_word(const AffineIfs& ifs, const IndexWord& w, const Point& x) {
  Point y = x;
  for (std::size_t i = w.size(); i-- > 0;) y = ifs.map(w[i])(y);
  return y;
}

AffineMap compose_word(const AffineIfs& ifs, const IndexWord& w) {
  AffineMap out = AffineMap::identity(ifs.dim());
  for (std::size_t i = 0; i < w.size(); ++i) out = out.compose(ifs.map(w[i]));
  return out;
}

Point word_fixed_point(const AffineIfs& ifs, const IndexWord& w) {
  if (w.empty()) throw FixedSetNotPoint("the empty word fixes every point");
  const AffineMap m = compose_word(ifs, w);
  const auto sol = solve_linear(RationalMatrix::identity(m.dim()) - m.linear(), m.offset());
  if (sol.kind != LinearSolution::Kind::unique)
    throw FixedSetNotPoint("fixed set of " + to_string(w) + " is " +
                           (sol.kind == LinearSolution::Kind::none ? "empty" : "an affine subspace"));
  return Point(sol.particular);
}

LipschitzBounds contraction_bounds(const AffineMap& m) {
  LipschitzBounds out;
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (m.dim() == 1) {
    Rational a = rational_abs(m.linear()(0, 0));
    const double approx = a.get_d();
    out.low = std::max(0.0, std::nextafter(approx, -inf));
    out.high = std::nextafter(approx, inf);
    out.proper = a < 1;
    out.exact = std::move(a);
    return out;
  }
  const auto d = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXd a(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c)
      a(r, c) = m.linear()(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).get_d();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  const double hi = s.maxCoeff();
  const double lo = s.minCoeff();
  // Backward-stable SVD plus rational-to-double rounding: pad outward.
  const double slack = 64 * std::numeric_limits<double>::epsilon() * std::max(hi, 1.0);
  out.high = hi + slack;
  out.low = std::max(0.0, lo - slack);
  out.proper = out.high < 1.0;
  return out;
}

std::optional<ClosedInterval> cantor_image_cell(const AffineMap& m) {
  if (m.dim() != 1) return std::nullopt;
  const Rational& a = m.linear()(0, 0);
  const Rational& b = m.offset()[0];
  const Rational scale = rational_abs(a);
  if (sgn(scale) == 0 || scale.get_num() != 1) return std::nullopt;
  mpz_class den = scale.get_den();
  std::size_t level = 0;
  while (den % 3 == 0) {
    den /= 3;
    ++level;
  }
  if (den != 1) return std::nullopt;
  const Rational lo = sgn(a) > 0 ? b : Rational(a + b);
  const Rational hi = lo + scale;
  const Rational cells = 1 / scale;  // 3^level
  const Rational index = lo * cells;
  if (index.get_den() != 1 || sgn(index) < 0 || index >= cells) return std::nullopt;
  mpz_class digits = index.get_num();
  for (std::size_t i = 0; i < level; ++i) {
    const mpz_class digit = digits % 3;
    if (digit == 1) return std::nullopt;
    digits /= 3;
  }
  return ClosedInterval{lo, hi};
}

}  // namespace ifs_cstar
