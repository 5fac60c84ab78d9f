#pragma once

#include <optional>
#include <vector>

#include "ifs_cstar/affine.hpp"
#include "ifs_cstar/space.hpp"

namespace ifs_cstar {

// Rational interval with independent open/closed ends.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
  static Interval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }

  bool empty() const;
  bool contains(const Rational& x) const;
  Interval intersect(const Interval& o) const;
  // Some point of a non-empty interval.
  Rational representative() const;
};

// Product of intervals.
struct Region {
  std::vector<Interval> sides;

  static Region from(const BoxSpace& box);
  static Region from(const OpenBox& box);

  bool empty() const;
  bool contains(const Point& x) const;
  Region intersect(const Region& o) const;
  Point representative() const;
};

// Image of a region under a monomial map (throws UnsupportedError otherwise).
Region image_region(const AffineMap& m, const Region& r);

// A point of the open, half-open or closed interval that lies in the Cantor
// set; nullopt when they are disjoint. Exact.
std::optional<Rational> cantor_meets(const Interval& interval);

// A point of X inside `piece`; Box and Cantor spaces only.
std::optional<Point> witness_in(const SpaceDescriptor& space, const Region& piece);

// A point of X inside `piece` but outside every region of `cover`.
std::optional<Point> witness_outside(const SpaceDescriptor& space, const Region& piece,
                                     const std::vector<Region>& cover);

// A point of a relatively open cell of the box left uncovered by `cover`;
// nullopt iff the union of `cover` is dense in the box.
std::optional<Point> uncovered_open_cell(const BoxSpace& box, const std::vector<Region>& cover);

}  // namespace ifs_cstar
