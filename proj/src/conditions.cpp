#include "ifs_cstar/conditions.hpp"

#include <map>
#include <sstream>

#include "ifs_cstar/errors.hpp"

namespace ifs_cstar {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "true";
    case Tri::no: return "false";
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

Tri tri_from_string(const std::string& s) {
  if (s == "true") return Tri::yes;
  if (s == "false") return Tri::no;
  if (s == "unknown") return Tri::unknown;
  throw ConfigError("not a truth value: " + s);
}

std::string to_string(Method m) {
  switch (m) {
    case Method::exact_affine: return "exact-affine";
    case Method::contraction_criterion: return "contraction-criterion";
    case Method::cover_approximate: return "cover-approximate";
    case Method::user_asserted: return "user-asserted";
  }
  return "exact-affine";
}

Method method_from_string(const std::string& s) {
  if (s == "exact-affine") return Method::exact_affine;
  if (s == "contraction-criterion") return Method::contraction_criterion;
  if (s == "cover-approximate") return Method::cover_approximate;
  if (s == "user-asserted") return Method::user_asserted;
  throw ConfigError("unknown check method: " + s);
}

std::optional<Point> SigmaResult::operator()(const Point& y) const {
  for (const auto& b : branches)
    if (b.region.contains(y)) return b.inverse(y);
  return std::nullopt;
}

namespace {

ConditionResult unknown(Method method, std::string notes) {
  ConditionResult r;
  r.holds = Tri::unknown;
  r.method = method;
  r.notes = std::move(notes);
  return r;
}

ConditionResult failure(Method method, std::vector<Point> points, std::vector<IndexWord> words, std::string notes) {
  ConditionResult r;
  r.holds = Tri::no;
  r.method = method;
  r.witness_points = std::move(points);
  r.witness_words = std::move(words);
  r.notes = std::move(notes);
  return r;
}

Region hull_region(const SpaceDescriptor& space) {
  if (const auto* box = std::get_if<BoxSpace>(&space)) return Region::from(*box);
  return Region{{Interval::closed(0, 1)}};
}

// gamma_k(X) as an exact region; nullopt when it is not a box.
std::optional<Region> image_of_space(const AffineIfs& ifs, int k) {
  const AffineMap& m = ifs.map(k);
  if (const auto* box = std::get_if<BoxSpace>(&ifs.space())) {
    if (!m.is_monomial()) return std::nullopt;
    return image_region(m, Region::from(*box));
  }
  if (std::holds_alternative<CantorSpace>(ifs.space())) {
    auto cell = cantor_image_cell(m);
    if (!cell) return std::nullopt;
    return Region{{Interval::closed(cell->lo, cell->hi)}};
  }
  return std::nullopt;
}

std::vector<Point> region_vertices(const Region& r) {
  BoxSpace box;
  for (const auto& s : r.sides) box.sides.push_back({s.lo, s.hi});
  return box.vertices();
}

Rational pow3_inverse(int r) {
  mpz_class p = 1;
  for (int i = 0; i < r; ++i) p *= 3;
  return Rational(mpz_class(1), p);
}

}  // namespace

ConditionResult check_embeddings(const AffineIfs& ifs) {
  for (int k = 1; k <= ifs.size(); ++k) {
    const AffineMap& m = ifs.map(k);
    if (m.is_injective()) continue;
    const std::vector<Rational> zero(m.dim(), Rational(0));
    const auto kernel = solve_linear(m.linear(), zero).null_basis;
    if (const auto* box = std::get_if<BoxSpace>(&ifs.space())) {
      std::vector<Rational> centre;
      for (const auto& s : box->sides) centre.push_back((s.lo + s.hi) / 2);
      for (const auto& v : kernel) {
        std::optional<Rational> step;
        bool blocked = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (sgn(v[i]) == 0) continue;
          const Rational half = (box->sides[i].hi - box->sides[i].lo) / 2;
          if (sgn(half) == 0) blocked = true;
          const Rational t = half / rational_abs(v[i]);
          if (!step || t < *step) step = t;
        }
        if (blocked || !step) continue;
        std::vector<Rational> other = centre;
        for (std::size_t i = 0; i < v.size(); ++i) other[i] += *step * v[i];
        return failure(Method::exact_affine, {Point(centre), Point(other)}, {IndexWord{k}},
                       "map " + std::to_string(k) + " identifies two distinct points");
      }
      return unknown(Method::exact_affine,
                     "map " + std::to_string(k) + " is singular but its kernel is transverse to the box");
    }
    if (std::holds_alternative<CantorSpace>(ifs.space()))
      return failure(Method::exact_affine, {Point{0}, Point{1}}, {IndexWord{k}},
                     "map " + std::to_string(k) + " is constant");
    return unknown(Method::cover_approximate, "singular map on an attractor");
  }
  ConditionResult r;
  r.holds = Tri::yes;
  r.method = Method::exact_affine;
  r.notes = "every map has nonzero determinant";
  return r;
}

ConditionResult check_open_set_condition(const AffineIfs& ifs, int resolution) {
  if (!ifs.open_set()) throw ConfigError("open set required");
  return check_open_set_condition(ifs, *ifs.open_set(), resolution);
}

ConditionResult check_open_set_condition(const AffineIfs& ifs, const OpenSetSpec& open_set, int resolution) {
  const SpaceDescriptor& space = ifs.space();
  if (std::holds_alternative<AttractorSpace>(space))
    return unknown(Method::cover_approximate, "open set condition is not decided on attractor spaces");
  if (open_set.boxes.empty()) throw ConfigError("open set required");
  const bool cantor = std::holds_alternative<CantorSpace>(space);
  const Method method = cantor ? Method::cover_approximate : Method::exact_affine;
  for (const auto& m : ifs.maps())
    if (!m.is_monomial()) return unknown(method, "images of boxes under non-monomial maps are not boxes");

  const Region hull = hull_region(space);
  std::vector<Region> cover;
  for (const auto& b : open_set.boxes) cover.push_back(Region::from(b));

  std::vector<std::vector<Region>> pieces(static_cast<std::size_t>(ifs.size()));
  for (int k = 1; k <= ifs.size(); ++k)
    for (const auto& u : cover) {
      const Region clipped = u.intersect(hull);
      if (!clipped.empty()) pieces[static_cast<std::size_t>(k - 1)].push_back(image_region(ifs.map(k), clipped));
    }

  for (int j = 1; j <= ifs.size(); ++j)
    for (int k = j + 1; k <= ifs.size(); ++k)
      for (const auto& p : pieces[static_cast<std::size_t>(j - 1)])
        for (const auto& q : pieces[static_cast<std::size_t>(k - 1)]) {
          const Region both = p.intersect(q);
          if (both.empty()) continue;
          if (auto w = witness_in(space, both)) {
            auto r = failure(method, {*w}, {IndexWord{j}, IndexWord{k}},
                             "images of U under maps " + std::to_string(j) + " and " + std::to_string(k) +
                                 " meet at the witness");
            if (cantor) r.resolution = resolution;
            return r;
          }
        }

  for (int k = 1; k <= ifs.size(); ++k)
    for (const auto& p : pieces[static_cast<std::size_t>(k - 1)])
      if (auto w = witness_outside(space, p, cover)) {
        auto r = failure(method, {*w}, {IndexWord{k}},
                         "image of U under map " + std::to_string(k) + " leaves U at the witness");
        if (cantor) r.resolution = resolution;
        return r;
      }

  ConditionResult r;
  r.method = method;
  if (const auto* box = std::get_if<BoxSpace>(&space)) {
    if (auto w = uncovered_open_cell(*box, cover))
      return failure(method, {*w}, {}, "U is not dense: an open cell around the witness misses U");
    r.holds = Tri::yes;
    r.notes = "images pairwise disjoint; images inside U; U dense in X (exact)";
    return r;
  }
  // Cantor: density certified on every cell of the given level.
  if (resolution < 0) throw ConfigError("resolution must be non-negative");
  const Rational width = pow3_inverse(resolution);
  const std::size_t cells = std::size_t{1} << resolution;
  for (std::size_t idx = 0; idx < cells; ++idx) {
    Rational lo = 0;
    Rational scale = 1;
    for (int bit = resolution - 1; bit >= 0; --bit) {
      scale /= 3;
      if ((idx >> bit) & 1u) lo += 2 * scale;
    }
    const Interval cell = Interval::closed(lo, lo + width);
    bool meets = false;
    for (const auto& u : cover)
      if (cantor_meets(cell.intersect(u.sides[0]))) {
        meets = true;
        break;
      }
    if (!meets) {
      auto fail = failure(method, {Point{lo}}, {},
                          "the level-" + std::to_string(resolution) + " cell starting at the witness misses U");
      fail.resolution = resolution;
      return fail;
    }
  }
  r.holds = Tri::yes;
  r.resolution = resolution;
  r.notes = "images pairwise disjoint; images inside U (exact); U meets every level-" + std::to_string(resolution) +
            " cell of X";
  return r;
}

ConditionResult check_graph_separation(const AffineIfs& ifs) {
  const SpaceDescriptor& space = ifs.space();
  const bool attractor = std::holds_alternative<AttractorSpace>(space);
  const Method method = attractor ? Method::cover_approximate : Method::exact_affine;
  bool undecided = false;
  std::string undecided_note;
  for (int j = 1; j <= ifs.size(); ++j)
    for (int k = j + 1; k <= ifs.size(); ++k) {
      const AffineMap& a = ifs.map(j);
      const AffineMap& b = ifs.map(k);
      std::vector<Rational> rhs(a.dim());
      for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = b.offset()[i] - a.offset()[i];
      const auto sol = solve_linear(a.linear() - b.linear(), rhs);
      const std::vector<IndexWord> words{IndexWord{j}, IndexWord{k}};
      if (sol.kind == LinearSolution::Kind::none) continue;
      if (sol.kind == LinearSolution::Kind::unique) {
        const Point x(sol.particular);
        const Membership in = space_contains(space, x);
        if (!in.approximate) {
          if (in.inside)
            return failure(method, {x}, words,
                           "maps " + std::to_string(j) + " and " + std::to_string(k) + " agree at the witness");
          continue;
        }
        if (in.inside) {
          undecided = true;
          undecided_note = "maps " + std::to_string(j) + " and " + std::to_string(k) +
                           " agree at a point within tolerance of the attractor cover";
        }
        continue;
      }
      if (a == b) {
        Point x = attractor ? word_fixed_point(ifs, IndexWord{j}) : hull_vertices(space).front();
        auto r = failure(method, {x}, words,
                         "maps " + std::to_string(j) + " and " + std::to_string(k) + " are identical");
        if (attractor) r.method = Method::exact_affine;
        return r;
      }
      undecided = true;
      undecided_note = "maps " + std::to_string(j) + " and " + std::to_string(k) +
                       " agree on a positive-dimensional affine subspace; its intersection with X is not decided";
    }
  if (undecided) return unknown(method, undecided_note);
  ConditionResult r;
  r.holds = Tri::yes;
  r.method = method;
  r.notes = ifs.size() == 1 ? "single map" : "no two maps agree at a point of X";
  return r;
}

ConditionResult check_essential_freeness(const AffineIfs& ifs, int depth, FreenessPath path) {
  if (depth < 1) throw ConfigError("essential freeness depth must be at least 1");
  const SpaceDescriptor& space = ifs.space();
  if (path == FreenessPath::automatic) {
    // The contraction criterion goes through the reduction to periodic words,
    // which needs injective maps and the open set condition.
    bool eligible = ifs.open_set().has_value() && has_isolated_points(space) == false;
    for (const auto& m : ifs.maps()) eligible = eligible && m.is_injective() && contraction_bounds(m).proper;
    if (eligible) {
      ConditionResult osc;
      try {
        osc = check_open_set_condition(ifs, *ifs.open_set(), 6);
      } catch (const UnsupportedError&) {
        osc.holds = Tri::unknown;
      }
      if (osc.holds == Tri::yes) {
        ConditionResult r;
        r.holds = Tri::yes;
        r.method = Method::contraction_criterion;
        r.notes = "injective proper contractions with the open set condition on a space without isolated points";
        return r;
      }
    }
  }

  // An affine coincidence set meets a convex X (or the Cantor set) in a set
  // with interior iff the two maps agree on the hull vertices of X.
  const std::vector<Point> frame = hull_vertices(space);
  const bool attractor = std::holds_alternative<AttractorSpace>(space);
  std::map<std::vector<Point>, IndexWord> seen;
  for (const auto& w : IndexWord::all_up_to_length(static_cast<std::size_t>(depth), ifs.size())) {
    const AffineMap m = compose_word(ifs, w);
    std::vector<Point> signature;
    for (const auto& v : frame) signature.push_back(m(v));
    auto [it, inserted] = seen.emplace(std::move(signature), w);
    if (inserted) continue;
    const Point at = attractor ? word_fixed_point(ifs, IndexWord{1}) : frame.front();
    auto r = failure(attractor ? Method::exact_affine : Method::exact_affine, {at}, {it->second, w},
                     "words " + to_string(it->second) + " and " + to_string(w) + " coincide on all of X");
    return r;
  }
  if (attractor)
    return unknown(Method::cover_approximate,
                   "no identical word maps up to depth " + std::to_string(depth) +
                       "; isolated points of the attractor are not decided");
  ConditionResult r;
  r.holds = Tri::yes;
  r.method = Method::exact_affine;
  r.up_to_depth = depth;
  r.notes = "no coincidence set with interior for words up to length " + std::to_string(depth);
  return r;
}

SeedRefinement scan_seed_set(const AffineIfs& ifs, const std::vector<Point>& seeds, int depth) {
  if (depth < 0) throw ConfigError("refinement depth must be non-negative");
  const std::size_t n = static_cast<std::size_t>(ifs.size());
  const std::size_t levels = 2 * static_cast<std::size_t>(depth);
  {
    double total = 0;
    double layer = 1;
    for (std::size_t l = 0; l <= levels; ++l, layer *= static_cast<double>(n)) total += layer;
    if (total > 4.0e6) throw ConfigError("refinement depth too large for this alphabet");
  }
  std::vector<std::size_t> power(levels + 1, 1);
  for (std::size_t l = 1; l <= levels; ++l) power[l] = power[l - 1] * n;

  SeedRefinement out;
  out.depth = depth;
  std::map<Point, std::pair<std::size_t, IndexWord>> claimed;  // orbit point -> (kept seed, word)
  const auto d_words = static_cast<std::size_t>(depth);

  auto word_at = [&](std::size_t length, std::size_t index) {
    std::vector<int> letters(length);
    for (std::size_t i = 0; i < length; ++i) {
      letters[i] = static_cast<int>(index / power[length - 1 - i]) + 1;
      index %= power[length - 1 - i];
    }
    return IndexWord(std::move(letters));
  };

  for (const auto& seed : seeds) {
    if (!space_contains(ifs.space(), seed)) throw ConfigError("seed " + to_string(seed) + " is not in the space");
    if (ifs.open_set() && !ifs.open_set()->contains(seed))
      throw ConfigError("seed " + to_string(seed) + " is not in the open set U");

    // images[l][i]: image of the seed under the i-th word of length l, where
    // the word (k, u) has index (k-1) N^|u| + index(u).
    std::vector<std::vector<Point>> images(levels + 1);
    images[0].push_back(seed);
    for (std::size_t l = 0; l < levels; ++l) {
      images[l + 1].reserve(images[l].size() * n);
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& p : images[l]) images[l + 1].push_back(ifs.maps()[k](p));
    }

    std::optional<RemovedSeed> verdict;
    // Orbit point p = gamma_w(seed); its images gamma_u(p) are images[|u|+|w|]
    // at index(u) N^|w| + index(w).
    for (std::size_t wl = 0; wl <= d_words && !verdict; ++wl)
      for (std::size_t wi = 0; wi < power[wl] && !verdict; ++wi) {
        std::map<Point, std::pair<std::size_t, std::size_t>> first;
        for (std::size_t ul = 0; ul <= d_words && !verdict; ++ul)
          for (std::size_t ui = 0; ui < power[ul]; ++ui) {
            const Point& img = images[ul + wl][ui * power[wl] + wi];
            auto [it, inserted] = first.emplace(img, std::make_pair(ul, ui));
            if (inserted) continue;
            RemovedSeed r;
            r.seed = seed;
            r.word_a = word_at(ul, ui);
            r.word_b = word_at(it->second.first, it->second.second);
            r.point = images[wl][wi];
            r.reason = "words " + to_string(r.word_a) + " and " + to_string(r.word_b) + " coincide at " +
                       to_string(r.point) + " = gamma_" + to_string(word_at(wl, wi)) + "(" + to_string(seed) + ")";
            verdict = std::move(r);
            break;
          }
      }

    if (!verdict) {
      for (std::size_t l = 0; l <= d_words && !verdict; ++l)
        for (std::size_t i = 0; i < power[l]; ++i) {
          auto it = claimed.find(images[l][i]);
          if (it == claimed.end()) continue;
          RemovedSeed r;
          r.seed = seed;
          r.word_a = word_at(l, i);
          r.word_b = it->second.second;
          r.point = images[l][i];
          r.reason = "orbit meets the orbit of kept seed " + to_string(out.kept[it->second.first]) + ": gamma_" +
                     to_string(r.word_a) + "(" + to_string(seed) + ") = gamma_" + to_string(r.word_b) + "(" +
                     to_string(out.kept[it->second.first]) + ")";
          verdict = std::move(r);
          break;
        }
    }

    if (verdict) {
      out.removed.push_back(std::move(*verdict));
      continue;
    }
    const std::size_t id = out.kept.size();
    out.kept.push_back(seed);
    for (std::size_t l = 0; l <= d_words; ++l)
      for (std::size_t i = 0; i < power[l]; ++i) claimed.emplace(images[l][i], std::make_pair(id, word_at(l, i)));
  }
  return out;
}

SeedRefinement refine_seed_set(const AffineIfs& ifs, const std::vector<Point>& seeds, int depth) {
  SeedRefinement out = scan_seed_set(ifs, seeds, depth);
  if (out.kept.empty()) throw NoAdmissibleSeeds();
  return out;
}

SigmaResult construct_left_inverse(const AffineIfs& ifs) {
  SigmaResult out;
  for (int k = 1; k <= ifs.size(); ++k)
    if (!ifs.map(k).is_injective())
      throw ConfigError("left inverse requires invertible maps; map " + std::to_string(k) + " is singular");
  for (int k = 1; k <= ifs.size(); ++k) {
    auto region = image_of_space(ifs, k);
    if (!region) {
      out.decided = false;
      out.consistent = false;
      out.notes = "image regions are not exact boxes for this space";
      out.branches.clear();
      return out;
    }
    out.branches.push_back({k, *region, *ifs.map(k).inverse()});
  }
  out.consistent = true;
  for (std::size_t a = 0; a < out.branches.size(); ++a)
    for (std::size_t b = a + 1; b < out.branches.size(); ++b) {
      const Region overlap = out.branches[a].region.intersect(out.branches[b].region);
      if (overlap.empty()) continue;
      // Affine branches agree on a box iff they agree at its vertices.
      for (const auto& v : region_vertices(overlap)) {
        out.overlap_witnesses.push_back(v);
        if (!(out.branches[a].inverse(v) == out.branches[b].inverse(v))) {
          out.consistent = false;
          if (!out.notes.empty()) out.notes += "; ";
          out.notes += "branches " + std::to_string(out.branches[a].index) + " and " +
                       std::to_string(out.branches[b].index) + " disagree at " + to_string(v);
        }
      }
    }
  if (out.consistent) out.notes = out.overlap_witnesses.empty() ? "image regions are disjoint"
                                                                 : "branch inverses agree on every overlap";
  return out;
}

ConditionResult check_clopen_iterated_image(const AffineIfs& ifs, int n_max) {
  if (n_max < 1) throw ConfigError("n_max must be at least 1");
  const SpaceDescriptor& space = ifs.space();
  ConditionResult r;
  r.method = Method::exact_affine;
  if (std::holds_alternative<AttractorSpace>(space)) {
    r.holds = Tri::yes;
    r.notes = "the attractor satisfies gamma(X) = X";
    return r;
  }
  std::vector<Region> images;
  for (int k = 1; k <= ifs.size(); ++k) {
    auto region = image_of_space(ifs, k);
    if (!region) return unknown(Method::exact_affine, "images of X are not boxes under non-monomial maps");
    images.push_back(*region);
  }
  const auto missed = witness_outside(space, hull_region(space), images);
  if (!missed) {
    r.holds = Tri::yes;
    r.notes = "gamma(X) = X, so gamma^n(X) = X for every n";
    return r;
  }
  if (std::holds_alternative<CantorSpace>(space)) {
    r.holds = Tri::yes;
    r.notes = "gamma^n(X) is a finite union of cylinder sets X cap cell, each clopen (checked through n = " +
              std::to_string(n_max) + " by construction)";
    return r;
  }
  // X is a box, hence connected: a nonempty proper closed subset is not open.
  return failure(Method::exact_affine, {*missed}, {},
                 "gamma(X) is a nonempty proper closed subset of the connected space X; the witness lies outside it");
}

bool vanishes_on_image(const AffineIfs& ifs, const PolyFn& a, const std::vector<Point>& sample) {
  if (a.length() != 0) throw ArityError("vanishes_on_image expects a function on X");
  for (const auto& x : sample)
    for (const auto& m : ifs.maps()) {
      const Point y = m(x);
      if (!a.evaluate(std::span<const Point>(&y, 1)).is_zero()) return false;
    }
  return true;
}

}  // namespace ifs_cstar
