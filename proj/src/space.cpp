#include "ifs_cstar/space.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <set>

#include "ifs_cstar/errors.hpp"
#include "ifs_cstar/ifs.hpp"

namespace ifs_cstar {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<double> to_doubles(const Point& p) {
  std::vector<double> out;
  for (const auto& c : p.coords()) out.push_back(c.get_d());
  return out;
}

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

struct DoubleAffine {
  std::vector<double> linear;  // row-major
  std::vector<double> offset;
  double lipschitz = 1.0;

  std::vector<double> apply(const std::vector<double>& x) const {
    const std::size_t d = offset.size();
    std::vector<double> y = offset;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) y[r] += linear[r * d + c] * x[c];
    return y;
  }
};

// Distance from x to the depth-limited Hutchinson ball cover of the attractor.
// The root ball B(p, R) with p = fix(gamma_1) and R = max|gamma_k(p) - p| / (1 - c)
// is mapped into itself by every generator, so every image ball nests inside
// its parent and branches farther than the tolerance can be pruned.
Membership attractor_contains(const AttractorSpace& space, const Point& x) {
  if (space.generators.empty()) throw ConfigError("attractor space without generators");
  const std::size_t d = space.generators.front().dim();
  std::vector<DoubleAffine> maps;
  double c_max = 0;
  for (const auto& g : space.generators) {
    DoubleAffine m;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) m.linear.push_back(g.linear()(r, c).get_d());
    for (const auto& o : g.offset()) m.offset.push_back(o.get_d());
    m.lipschitz = contraction_bounds(g).high;
    c_max = std::max(c_max, m.lipschitz);
    maps.push_back(std::move(m));
  }
  if (c_max >= 1.0) throw ConfigError("attractor space requires proper contractions");

  const Point fix = [&] {
    const AffineMap& g = space.generators.front();
    auto sol = solve_linear(RationalMatrix::identity(d) - g.linear(), g.offset());
    if (sol.kind != LinearSolution::Kind::unique) throw ConfigError("attractor generator without a unique fixed point");
    return Point(sol.particular);
  }();
  const std::vector<double> root = to_doubles(fix);
  double radius = 0;
  for (const auto& m : maps) radius = std::max(radius, euclid(m.apply(root), root));
  radius /= (1.0 - c_max);

  const std::vector<double> target = to_doubles(x);
  const double tol = space.tolerance;
  constexpr std::size_t kMaxNodes = 1u << 20;
  std::size_t visited = 0;
  double best = std::numeric_limits<double>::infinity();

  std::function<void(const std::vector<double>&, double)> descend = [&](const std::vector<double>& centre,
                                                                         double r) {
    ++visited;
    const double dist = std::max(0.0, euclid(centre, target) - r);
    if (dist > tol) {
      best = std::min(best, dist);
      return;
    }
    if (r <= tol / 2 || visited >= kMaxNodes) {
      best = std::min(best, dist);
      return;
    }
    for (const auto& m : maps) descend(m.apply(centre), r * m.lipschitz);
  };
  descend(root, radius);
  return {best <= tol, true, best};
}

}  // namespace

std::vector<Point> BoxSpace::vertices() const {
  std::vector<Point> out;
  const std::size_t d = sides.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<Rational> c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = (mask >> i) & 1 ? sides[i].hi : sides[i].lo;
    Point p(std::move(c));
    bool dup = false;
    for (const auto& q : out) dup = dup || q == p;
    if (!dup) out.push_back(std::move(p));
  }
  return out;
}

bool cantor_contains(const Rational& x) {
  // x is in the set iff the inverse branches 3x (on [0,1/3]) and 3x-2 (on
  // [2/3,1]) can be followed forever; the orbit of a rational is eventually
  // periodic, so a revisit certifies membership and a gap visit refutes it.
  static const Rational third(1, 3);
  static const Rational two_thirds(2, 3);
  if (sgn(x) < 0 || x > 1) return false;
  std::set<Rational> seen;
  Rational y = x;
  while (seen.insert(y).second) {
    if (y <= third) {
      y = 3 * y;
    } else if (y >= two_thirds) {
      y = 3 * y - 2;
    } else {
      return false;
    }
  }
  return true;
}

Membership space_contains(const SpaceDescriptor& space, const Point& x) {
  return std::visit(overloaded{
                        [&](const BoxSpace& box) {
                          if (x.dim() != box.sides.size()) return Membership{false, false, 0};
                          for (std::size_t i = 0; i < x.dim(); ++i)
                            if (x[i] < box.sides[i].lo || x[i] > box.sides[i].hi) return Membership{false, false, 0};
                          return Membership{true, false, 0};
                        },
                        [&](const CantorSpace&) {
                          if (x.dim() != 1) return Membership{false, false, 0};
                          return Membership{cantor_contains(x[0]), false, 0};
                        },
                        [&](const AttractorSpace& a) { return attractor_contains(a, x); },
                    },
                    space);
}

std::size_t space_dimension(const SpaceDescriptor& space) {
  return std::visit(overloaded{
                        [](const BoxSpace& box) { return box.sides.size(); },
                        [](const CantorSpace&) { return std::size_t{1}; },
                        [](const AttractorSpace& a) {
                          return a.generators.empty() ? std::size_t{0} : a.generators.front().dim();
                        },
                    },
                    space);
}

std::optional<bool> has_isolated_points(const SpaceDescriptor& space) {
  return std::visit(overloaded{
                        [](const BoxSpace& box) -> std::optional<bool> {
                          // A box is either a single point or has no isolated points.
                          for (const auto& s : box.sides)
                            if (s.lo != s.hi) return false;
                          return true;
                        },
                        [](const CantorSpace&) -> std::optional<bool> { return false; },
                        [](const AttractorSpace&) -> std::optional<bool> { return std::nullopt; },
                    },
                    space);
}

std::string space_kind(const SpaceDescriptor& space) {
  return std::visit(overloaded{
                        [](const BoxSpace& box) { return std::string(box.is_interval() ? "interval" : "box"); },
                        [](const CantorSpace&) { return std::string("cantor"); },
                        [](const AttractorSpace&) { return std::string("attractor"); },
                    },
                    space);
}

std::vector<Point> hull_vertices(const SpaceDescriptor& space) {
  return std::visit(overloaded{
                        [](const BoxSpace& box) { return box.vertices(); },
                        [](const CantorSpace&) { return std::vector<Point>{Point{0}, Point{1}}; },
                        [](const AttractorSpace& a) {
                          const std::size_t d = a.generators.empty() ? 1 : a.generators.front().dim();
                          std::vector<Point> frame{Point(std::vector<Rational>(d, Rational(0)))};
                          for (std::size_t i = 0; i < d; ++i) {
                            std::vector<Rational> e(d, Rational(0));
                            e[i] = 1;
                            frame.emplace_back(std::move(e));
                          }
                          return frame;
                        },
                    },
                    space);
}

bool OpenBox::contains(const Point& x) const {
  if (x.dim() != sides.size()) return false;
  for (std::size_t i = 0; i < sides.size(); ++i)
    if (!(sides[i].first < x[i] && x[i] < sides[i].second)) return false;
  return true;
}

bool OpenSetSpec::contains(const Point& x) const {
  for (const auto& b : boxes)
    if (b.contains(x)) return true;
  return false;
}

OpenBox parse_open_box(const std::string& text) {
  OpenBox box;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '(' in open box", pos);
    const std::size_t comma = text.find(',', pos);
    const std::size_t close = text.find(')', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw ParseError("expected '(lo,hi)' in open box", pos);
    Rational lo, hi;
    try {
      lo = parse_rational(std::string_view(text).substr(pos + 1, comma - pos - 1));
      hi = parse_rational(std::string_view(text).substr(comma + 1, close - comma - 1));
    } catch (const ParseError&) {
      throw ParseError("malformed bound in open box", pos + 1);
    }
    if (!(lo < hi)) throw ParseError("empty open interval", pos);
    box.sides.emplace_back(std::move(lo), std::move(hi));
    pos = close + 1;
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != 'x') throw ParseError("expected 'x' between open-box factors", pos);
    ++pos;
  }
  return box;
}

std::string to_string(const OpenBox& box) {
  std::string out;
  for (std::size_t i = 0; i < box.sides.size(); ++i) {
    if (i) out += "x";
    out += "(" + to_string(box.sides[i].first) + "," + to_string(box.sides[i].second) + ")";
  }
  return out;
}

}  // namespace ifs_cstar
