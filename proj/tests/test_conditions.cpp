#include "doctest.h"

#include "ifs_cstar/conditions.hpp"
#include "ifs_cstar/errors.hpp"
#include "ifs_cstar/random.hpp"
#include "support.hpp"

using namespace ifs_cstar;
using namespace testing_support;

namespace {

AffineIfs interval_system(std::vector<AffineMap> maps, std::optional<std::string> u = std::nullopt) {
  std::optional<OpenSetSpec> open;
  if (u) open = OpenSetSpec{{parse_open_box(*u)}};
  return AffineIfs(BoxSpace{{{0, 1}}}, std::move(maps), open);
}

}  // namespace

TEST_CASE("open set condition: half maps") {
  const auto r = check_open_set_condition(halfmaps(), 4);
  CHECK(r.holds == Tri::yes);
  CHECK(r.method == Method::exact_affine);
}

TEST_CASE("open set condition: cantor is certified at the resolution") {
  const auto r = check_open_set_condition(cantor(), 5);
  CHECK(r.holds == Tri::yes);
  CHECK(r.method == Method::cover_approximate);
  REQUIRE(r.resolution);
  CHECK(*r.resolution == 5);
}

TEST_CASE("open set condition: identical maps overlap") {
  const auto r = check_open_set_condition(duplicate(), 4);
  CHECK(r.holds == Tri::no);
  REQUIRE(r.witness_points.size() == 1);
  // Witness lies in both images gamma_1(U) = gamma_2(U) = (0,1/2).
  const Point& w = r.witness_points[0];
  CHECK(w[0] > 0);
  CHECK(w[0] < q("1/2"));
  CHECK(r.witness_words == std::vector<IndexWord>{IndexWord{1}, IndexWord{2}});
}

TEST_CASE("open set condition: failure modes") {
  CHECK_THROWS_WITH_AS(check_open_set_condition(interval_system({AffineMap::scalar(q("1/2"), 0)}), 3),
                       "open set required", ConfigError);
  // Image leaves U.
  const auto leaves = check_open_set_condition(
      interval_system({AffineMap::scalar(q("1/2"), 0), AffineMap::scalar(q("1/2"), q("1/2"))}, "(0,1/2)"), 3);
  CHECK(leaves.holds == Tri::no);
  // U not dense.
  const auto sparse = check_open_set_condition(
      interval_system({AffineMap::scalar(q("1/4"), 0), AffineMap::scalar(q("1/4"), q("1/4"))}, "(0,1/2)"), 3);
  CHECK(sparse.holds == Tri::no);
  REQUIRE(sparse.witness_points.size() == 1);
  CHECK(sparse.witness_points[0][0] > q("1/2"));
}

TEST_CASE("graph separation: half maps meet at x = 1") {
  const AffineIfs h = halfmaps();
  const auto r = check_graph_separation(h);
  CHECK(r.holds == Tri::no);
  REQUIRE(r.witness_points.size() == 1);
  const Point& x = r.witness_points[0];
  CHECK(x == pt("1"));
  CHECK(h.map(1)(x) == h.map(2)(x));
  CHECK(h.map(1)(x) == pt("1/2"));
}

TEST_CASE("graph separation: cantor and single maps") {
  CHECK(check_graph_separation(cantor()).holds == Tri::yes);
  CHECK(check_graph_separation(interval_system({AffineMap::scalar(q("1/2"), 0)})).holds == Tri::yes);
  // Graphs meet only at x = -3, outside X.
  CHECK(check_graph_separation(
            interval_system({AffineMap::scalar(q("1/3"), 0), AffineMap::scalar(q("1/2"), q("1/2"))}))
            .holds == Tri::yes);
  CHECK(check_graph_separation(
            interval_system({AffineMap::scalar(q("1/4"), 0), AffineMap::scalar(q("1/4"), q("1/2"))}))
            .holds == Tri::yes);
}

TEST_CASE("graph separation witnesses re-check exactly (fuzz)") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = random_rational(rng, 4, 5);
    Rational c = random_rational(rng, 4, 5);
    if (rational_abs(a) >= 1 || rational_abs(c) >= 1) continue;
    const Rational b = sgn(a) < 0 ? -a : Rational(0);
    const Rational d = sgn(c) < 0 ? Rational(1) : 1 - c;
    const AffineIfs s = interval_system({AffineMap::scalar(a, b), AffineMap::scalar(c, d)});
    const auto r = check_graph_separation(s);
    if (r.holds != Tri::no) continue;
    const Point& x = r.witness_points.at(0);
    CHECK(s.map(1)(x) == s.map(2)(x));
    CHECK(x[0] >= 0);
    CHECK(x[0] <= 1);
  }
}

TEST_CASE("essential freeness examples") {
  const auto c = check_essential_freeness(cantor(), 3);
  CHECK(c.holds == Tri::yes);
  CHECK(c.method == Method::contraction_criterion);
  const auto h = check_essential_freeness(halfmaps(), 3);
  CHECK(h.holds == Tri::yes);
  CHECK(h.method == Method::contraction_criterion);
  const auto d = check_essential_freeness(duplicate(), 3);
  CHECK(d.holds == Tri::no);
  CHECK(d.witness_words == std::vector<IndexWord>{IndexWord{1}, IndexWord{2}});
}

TEST_CASE("essential freeness: exact path") {
  const auto h = check_essential_freeness(halfmaps(), 3, FreenessPath::exact_only);
  CHECK(h.holds == Tri::yes);
  REQUIRE(h.up_to_depth);
  CHECK(*h.up_to_depth == 3);
  CHECK_FALSE(h.certified_true());
  // A map fixing all of X.
  const auto id = check_essential_freeness(
      interval_system({AffineMap::scalar(1, 0), AffineMap::scalar(q("1/2"), 0)}), 2);
  CHECK(id.holds == Tri::no);
  // gamma_1 gamma_2 = gamma_2 gamma_1 for commuting maps with distinct words.
  const auto comm = check_essential_freeness(
      interval_system({AffineMap::scalar(q("1/2"), 0), AffineMap::scalar(q("1/3"), 0)}), 2, FreenessPath::exact_only);
  CHECK(comm.holds == Tri::no);
  CHECK(compose_word(interval_system({AffineMap::scalar(q("1/2"), 0), AffineMap::scalar(q("1/3"), 0)}),
                     comm.witness_words.at(0)) ==
        compose_word(interval_system({AffineMap::scalar(q("1/2"), 0), AffineMap::scalar(q("1/3"), 0)}),
                     comm.witness_words.at(1)));
}

TEST_CASE("exact path and contraction criterion agree (fuzz)") {
  Rng rng(31);
  int compared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    // gamma_1 onto [0, c], gamma_2 onto [d, 1], c <= d, random orientations.
    const Rational c = frac(rng.between(1, 4), 10);
    const Rational d = c + frac(rng.between(0, 4), 10);
    const AffineMap g1 = rng.coin() ? AffineMap::scalar(c, 0) : AffineMap::scalar(-c, c);
    const AffineMap g2 = rng.coin() ? AffineMap::scalar(1 - d, d) : AffineMap::scalar(d - 1, 1);
    const AffineIfs s = interval_system({g1, g2}, "(0,1)");
    const auto fast = check_essential_freeness(s, 3);
    const auto exact = check_essential_freeness(s, 3, FreenessPath::exact_only);
    REQUIRE(fast.method == Method::contraction_criterion);
    CHECK(fast.holds == Tri::yes);
    CHECK(exact.holds != Tri::no);
    ++compared;
  }
  CHECK(compared == 100);
}

TEST_CASE("seed refinement examples") {
  const AffineIfs c = cantor();
  const auto kept = refine_seed_set(c, {pt("2/3")}, 3);
  CHECK(kept.kept == std::vector<Point>{pt("2/3")});
  CHECK(kept.removed.empty());

  const auto quarter = scan_seed_set(c, {pt("1/4")}, 2);
  CHECK(quarter.kept.empty());
  REQUIRE(quarter.removed.size() == 1);
  CHECK(quarter.removed[0].point == pt("1/4"));
  CHECK(((quarter.removed[0].word_a == IndexWord{1, 2} && quarter.removed[0].word_b == IndexWord{}) ||
         (quarter.removed[0].word_b == IndexWord{1, 2} && quarter.removed[0].word_a == IndexWord{})));

  const AffineIfs no_u(CantorSpace{}, c.maps());
  const auto zero = scan_seed_set(no_u, {pt("0")}, 1);
  REQUIRE(zero.removed.size() == 1);
  CHECK(((zero.removed[0].word_a == IndexWord{1} && zero.removed[0].word_b == IndexWord{}) ||
         (zero.removed[0].word_b == IndexWord{1} && zero.removed[0].word_a == IndexWord{})));

  CHECK_THROWS_AS(refine_seed_set(c, {pt("1/4")}, 2), NoAdmissibleSeeds);
  CHECK_THROWS_AS(refine_seed_set(c, {pt("1/2")}, 2), ConfigError);   // not in X
  CHECK_THROWS_AS(refine_seed_set(no_u, {pt("0")}, 1), NoAdmissibleSeeds);
  CHECK_THROWS_AS(refine_seed_set(c, {pt("0")}, 1), ConfigError);     // not in U
}

TEST_CASE("seed refinement removes overlapping orbits") {
  const AffineIfs c = cantor();
  // 2/9 = gamma_1(2/3)
  const auto r = refine_seed_set(c, {pt("2/3"), pt("2/9")}, 2);
  CHECK(r.kept == std::vector<Point>{pt("2/3")});
  REQUIRE(r.removed.size() == 1);
  CHECK(r.removed[0].seed == pt("2/9"));
}

TEST_CASE("seed refinement matches the brute-force scan and is idempotent (fuzz)") {
  Rng rng(41);
  const AffineIfs h = halfmaps();
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Point> seeds;
    for (int i = 0; i < 3; ++i) {
      Rational x = frac(rng.between(1, 23), 24);
      seeds.push_back(Point{x});
    }
    const auto r = scan_seed_set(h, seeds, 2);
    CHECK(r.kept == brute_force_kept(h, seeds, 2));
    if (!r.kept.empty()) CHECK(scan_seed_set(h, r.kept, 2).kept == r.kept);
  }
}

TEST_CASE("left inverse examples") {
  const AffineIfs h = halfmaps();
  const auto s = construct_left_inverse(h);
  CHECK(s.decided);
  CHECK(s.consistent);
  CHECK(s.overlap_witnesses == std::vector<Point>{pt("1/2")});
  REQUIRE(s.branches.size() == 2);
  CHECK(s.branches[0].inverse == AffineMap::scalar(2, 0));
  CHECK(s.branches[1].inverse == AffineMap::scalar(-2, 2));
  CHECK(*s(pt("1/2")) == pt("1"));

  const auto c = construct_left_inverse(cantor());
  CHECK(c.consistent);
  CHECK(c.overlap_witnesses.empty());
  CHECK(c.branches[1].inverse == AffineMap::scalar(3, -2));

  const auto bad = construct_left_inverse(
      interval_system({AffineMap::scalar(q("1/2"), 0), AffineMap::scalar(q("1/2"), q("1/2"))}));
  CHECK_FALSE(bad.consistent);
  CHECK(bad.overlap_witnesses == std::vector<Point>{pt("1/2")});

  CHECK_THROWS_AS(construct_left_inverse(interval_system({AffineMap::scalar(0, q("1/2"))})), ConfigError);
}

TEST_CASE("left inverse undoes every branch (fuzz)") {
  Rng rng(51);
  for (const AffineIfs& sys : {halfmaps(), cantor()}) {
    const auto s = construct_left_inverse(sys);
    REQUIRE(s.consistent);
    int checked = 0;
    while (checked < 100) {
      const Point x{frac(rng.between(0, 243), 243)};
      if (!space_contains(sys.space(), x).inside) continue;
      for (int k = 1; k <= sys.size(); ++k) CHECK(*s(sys.map(k)(x)) == x);
      ++checked;
    }
  }
}

TEST_CASE("clopen iterated images") {
  const auto c = check_clopen_iterated_image(cantor(), 3);
  CHECK(c.holds == Tri::yes);
  CHECK(check_clopen_iterated_image(halfmaps(), 3).holds == Tri::yes);
  const auto r = check_clopen_iterated_image(
      interval_system({AffineMap::scalar(q("1/3"), 0), AffineMap::scalar(q("1/3"), q("1/3"))}), 3);
  CHECK(r.holds == Tri::no);
  REQUIRE(r.witness_points.size() == 1);
  CHECK(r.witness_points[0][0] > q("2/3"));
}

TEST_CASE("vanishes on image") {
  CHECK(vanishes_on_image(halfmaps(), ChainFn::constant(0, 1, 0), {pt("1/2")}));
  CHECK_FALSE(vanishes_on_image(halfmaps(), ChainFn::parse("t0", 0, 1), {pt("1/2")}));
  CHECK_FALSE(vanishes_on_image(cantor(), ChainFn::parse("t0 - 1/2", 0, 1), {pt("2/3")}));
}

TEST_CASE("embeddings") {
  CHECK(check_embeddings(cantor()).holds == Tri::yes);
  const auto r = check_embeddings(interval_system({AffineMap::scalar(0, q("1/2"))}));
  CHECK(r.holds == Tri::no);
  REQUIRE(r.witness_points.size() == 2);
  CHECK_FALSE(r.witness_points[0] == r.witness_points[1]);
}
