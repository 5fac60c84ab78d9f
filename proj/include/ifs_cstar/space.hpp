#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ifs_cstar/affine.hpp"
#include "ifs_cstar/rational.hpp"

namespace ifs_cstar {

struct ClosedInterval {
  Rational lo;
  Rational hi;
};

// A closed axis-aligned box; one side is an interval.
struct BoxSpace {
  std::vector<ClosedInterval> sides;
  bool is_interval() const { return sides.size() == 1; }
  std::vector<Point> vertices() const;
};

// The middle-thirds Cantor set in [0,1].
struct CantorSpace {};

// The attractor of `generators` (filled from the system's maps when empty).
// Membership is judged against a finite ball cover at resolution `tolerance`.
struct AttractorSpace {
  double tolerance = 1e-6;
  std::vector<AffineMap> generators;
};

using SpaceDescriptor = std::variant<BoxSpace, CantorSpace, AttractorSpace>;

struct Membership {
  bool inside = false;
  bool approximate = false;
  // Distance to the cover; only meaningful when approximate.
  double distance = 0.0;
  explicit operator bool() const { return inside; }
};

Membership space_contains(const SpaceDescriptor& space, const Point& x);

// Exact digit-dynamics test for the middle-thirds set.
bool cantor_contains(const Rational& x);

std::size_t space_dimension(const SpaceDescriptor& space);

// nullopt when it cannot be decided (attractors).
std::optional<bool> has_isolated_points(const SpaceDescriptor& space);

std::string space_kind(const SpaceDescriptor& space);

// Convex hull vertices for Box and Cantor (endpoints 0 and 1); for attractors
// an affine frame (origin and unit vectors) instead.
std::vector<Point> hull_vertices(const SpaceDescriptor& space);

// Finite union of open boxes; in one dimension a union of open intervals.
struct OpenBox {
  std::vector<std::pair<Rational, Rational>> sides;
  bool contains(const Point& x) const;
};

struct OpenSetSpec {
  std::vector<OpenBox> boxes;
  bool contains(const Point& x) const;
};

// "(0,1)" or "(0,1)x(1/4,3/4)".
OpenBox parse_open_box(const std::string& text);
std::string to_string(const OpenBox& box);

}  // namespace ifs_cstar
