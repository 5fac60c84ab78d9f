#include "ifs_cstar/region.hpp"

#include <algorithm>
#include <functional>

#include "ifs_cstar/errors.hpp"

namespace ifs_cstar {

bool Interval::empty() const {
  if (lo < hi) return false;
  return !(lo == hi && lo_closed && hi_closed);
}

bool Interval::contains(const Rational& x) const {
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

Interval Interval::intersect(const Interval& o) const {
  Interval out;
  if (lo > o.lo) {
    out.lo = lo;
    out.lo_closed = lo_closed;
  } else if (lo < o.lo) {
    out.lo = o.lo;
    out.lo_closed = o.lo_closed;
  } else {
    out.lo = lo;
    out.lo_closed = lo_closed && o.lo_closed;
  }
  if (hi < o.hi) {
    out.hi = hi;
    out.hi_closed = hi_closed;
  } else if (hi > o.hi) {
    out.hi = o.hi;
    out.hi_closed = o.hi_closed;
  } else {
    out.hi = hi;
    out.hi_closed = hi_closed && o.hi_closed;
  }
  return out;
}

Rational Interval::representative() const {
  if (lo == hi) return lo;
  return (lo + hi) / 2;
}

Region Region::from(const BoxSpace& box) {
  Region r;
  for (const auto& s : box.sides) r.sides.push_back(Interval::closed(s.lo, s.hi));
  return r;
}

Region Region::from(const OpenBox& box) {
  Region r;
  for (const auto& s : box.sides) r.sides.push_back(Interval::open(s.first, s.second));
  return r;
}

bool Region::empty() const {
  return std::any_of(sides.begin(), sides.end(), [](const Interval& i) { return i.empty(); });
}

bool Region::contains(const Point& x) const {
  if (x.dim() != sides.size()) return false;
  for (std::size_t i = 0; i < sides.size(); ++i)
    if (!sides[i].contains(x[i])) return false;
  return true;
}

Region Region::intersect(const Region& o) const {
  Region out;
  for (std::size_t i = 0; i < sides.size(); ++i) out.sides.push_back(sides[i].intersect(o.sides[i]));
  return out;
}

Point Region::representative() const {
  std::vector<Rational> c;
  for (const auto& s : sides) c.push_back(s.representative());
  return Point(std::move(c));
}

Region image_region(const AffineMap& m, const Region& r) {
  if (!m.is_monomial()) throw UnsupportedError("image of a box under a non-monomial linear map is not a box");
  Region out;
  out.sides.resize(m.dim());
  for (std::size_t row = 0; row < m.dim(); ++row) {
    std::size_t col = 0;
    while (sgn(m.linear()(row, col)) == 0) ++col;
    const Rational& a = m.linear()(row, col);
    const Rational& b = m.offset()[row];
    const Interval& s = r.sides[col];
    if (sgn(a) > 0)
      out.sides[row] = {a * s.lo + b, a * s.hi + b, s.lo_closed, s.hi_closed};
    else
      out.sides[row] = {a * s.hi + b, a * s.lo + b, s.hi_closed, s.lo_closed};
  }
  return out;
}

std::optional<Rational> cantor_meets(const Interval& interval) {
  if (interval.empty()) return std::nullopt;
  if (interval.lo_closed && cantor_contains(interval.lo)) return interval.lo;
  if (interval.hi_closed && cantor_contains(interval.hi)) return interval.hi;
  // Level by level; only cells straddling an endpoint survive to the next
  // level, so the frontier stays small. The cap is a guard.
  constexpr int kMaxLevel = 4096;
  std::vector<Rational> frontier{Rational(0)};
  Rational len(1);
  for (int level = 0; !frontier.empty(); ++level) {
    if (level >= kMaxLevel) throw InternalError("Cantor interval test did not resolve");
    std::vector<Rational> next;
    for (const auto& l : frontier) {
      const Rational r = l + len;
      const bool disjoint = r < interval.lo || (r == interval.lo && !interval.lo_closed) || l > interval.hi ||
                            (l == interval.hi && !interval.hi_closed);
      if (disjoint) continue;
      const bool inside = (interval.lo < l || (interval.lo == l && interval.lo_closed)) &&
                          (r < interval.hi || (r == interval.hi && interval.hi_closed));
      if (inside) return l;
      next.push_back(l);
      next.push_back(l + 2 * len / 3);
    }
    frontier = std::move(next);
    len /= 3;
  }
  return std::nullopt;
}

std::optional<Point> witness_in(const SpaceDescriptor& space, const Region& piece) {
  if (const auto* box = std::get_if<BoxSpace>(&space)) {
    const Region r = piece.intersect(Region::from(*box));
    if (r.empty()) return std::nullopt;
    return r.representative();
  }
  if (std::holds_alternative<CantorSpace>(space)) {
    if (auto x = cantor_meets(piece.sides.at(0))) return Point{*x};
    return std::nullopt;
  }
  throw UnsupportedError("region tests are not available on attractor spaces");
}

namespace {

// One coordinate of the arrangement cut out by all region endpoints: either
// a breakpoint singleton or an open gap between consecutive breakpoints.
std::vector<Interval> arrangement(const Interval& side, const std::vector<Rational>& cuts, bool gaps_only) {
  std::vector<Rational> pts{side.lo, side.hi};
  for (const auto& c : cuts)
    if (c > side.lo && c < side.hi) pts.push_back(c);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Interval> out;
  if (pts.size() == 1) {
    if (!Interval::closed(pts[0], pts[0]).intersect(side).empty()) out.push_back(Interval::closed(pts[0], pts[0]));
    return out;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!gaps_only && side.contains(pts[i])) out.push_back(Interval::closed(pts[i], pts[i]));
    if (i + 1 < pts.size()) out.push_back(Interval::open(pts[i], pts[i + 1]));
  }
  return out;
}

std::vector<std::vector<Interval>> cell_elements(const Region& piece, const std::vector<Region>& cover,
                                                 bool gaps_only) {
  std::vector<std::vector<Interval>> elements;
  for (std::size_t i = 0; i < piece.sides.size(); ++i) {
    std::vector<Rational> cuts;
    for (const auto& c : cover) {
      cuts.push_back(c.sides[i].lo);
      cuts.push_back(c.sides[i].hi);
    }
    elements.push_back(arrangement(piece.sides[i], cuts, gaps_only));
  }
  return elements;
}

bool covered(const Point& x, const std::vector<Region>& cover) {
  return std::any_of(cover.begin(), cover.end(), [&](const Region& r) { return r.contains(x); });
}

// Visits every product cell; stops at the first witness returned by `probe`.
std::optional<Point> scan_cells(const std::vector<std::vector<Interval>>& elements,
                                const std::function<std::optional<Point>(const Region&)>& probe) {
  const std::size_t d = elements.size();
  for (const auto& e : elements)
    if (e.empty()) return std::nullopt;
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    Region cell;
    for (std::size_t i = 0; i < d; ++i) cell.sides.push_back(elements[i][idx[i]]);
    if (auto w = probe(cell)) return w;
    std::size_t i = 0;
    while (i < d && ++idx[i] == elements[i].size()) idx[i++] = 0;
    if (i == d) return std::nullopt;
  }
}

}  // namespace

std::optional<Point> witness_outside(const SpaceDescriptor& space, const Region& piece,
                                     const std::vector<Region>& cover) {
  Region clipped = piece;
  if (const auto* box = std::get_if<BoxSpace>(&space)) clipped = piece.intersect(Region::from(*box));
  else if (std::holds_alternative<CantorSpace>(space)) clipped = piece.intersect(Region{{Interval::closed(0, 1)}});
  else throw UnsupportedError("region tests are not available on attractor spaces");
  if (clipped.empty()) return std::nullopt;

  const bool cantor = std::holds_alternative<CantorSpace>(space);
  const auto elements = cell_elements(clipped, cover, false);
  return scan_cells(elements, [&](const Region& cell) -> std::optional<Point> {
    // Membership in every cover region is constant on a cell.
    const Point rep = cell.representative();
    if (covered(rep, cover)) return std::nullopt;
    if (!cantor) return rep;
    if (auto x = cantor_meets(cell.sides[0])) return Point{*x};
    return std::nullopt;
  });
}

std::optional<Point> uncovered_open_cell(const BoxSpace& box, const std::vector<Region>& cover) {
  const Region whole = Region::from(box);
  const auto elements = cell_elements(whole, cover, true);
  return scan_cells(elements, [&](const Region& cell) -> std::optional<Point> {
    const Point rep = cell.representative();
    if (covered(rep, cover)) return std::nullopt;
    return rep;
  });
}

}  // namespace ifs_cstar
