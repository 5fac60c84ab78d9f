#include "doctest.h"

#include "ifs_cstar/chain_fn.hpp"
#include "ifs_cstar/errors.hpp"
#include "ifs_cstar/random.hpp"
#include "ifs_cstar/region.hpp"
#include "support.hpp"

using namespace ifs_cstar;
using namespace testing_support;

TEST_CASE("rationals parse exactly and canonicalise") {
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  try {
    parse_rational("12/0");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
}

TEST_CASE("complex rationals") {
  const ComplexRational z(q("1/2"), q("-3"));
  CHECK(z.conj() == ComplexRational(q("1/2"), 3));
  CHECK(z * z.inverse() == ComplexRational(1));
  CHECK(to_string(z) == "1/2-3*i");
  CHECK(to_string(ComplexRational::i()) == "1*i");
}

TEST_CASE("round trip of random rationals through strings") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Rational r = random_rational(rng, 100000, 100000);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("words compose outermost first") {
  const IndexWord w{1, 2};
  CHECK(to_string(w) == "(1,2)");
  CHECK(IndexWord{1} * IndexWord{2} == w);
  CHECK(w.outer(1) == IndexWord{1});
  CHECK(w.strip(1) == IndexWord{2});
  CHECK(IndexWord::all_of_length(2, 2).size() == 4);
  CHECK(IndexWord::all_up_to_length(3, 2).size() == 15);
  // gamma_(1,2) = gamma_1 o gamma_2
  const AffineIfs c = cantor();
  CHECK(apply_word(c, w, pt("1/4")) == pt("1/4"));
  CHECK(apply_word(c, IndexWord{2}, pt("1/4")) == pt("3/4"));
}

TEST_CASE("word fixed points") {
  const AffineIfs c = cantor();
  // x/9 + 2/9 = x
  CHECK(word_fixed_point(c, IndexWord{1, 2}) == pt("1/4"));
  CHECK(word_fixed_point(c, IndexWord{2}) == pt("1"));
  CHECK_THROWS_AS(word_fixed_point(c, IndexWord{}), FixedSetNotPoint);
}

TEST_CASE("cantor membership is exact") {
  CHECK(cantor_contains(q("1/4")));
  CHECK(cantor_contains(q("3/4")));
  CHECK(cantor_contains(q("2/3")));
  CHECK(cantor_contains(q("1/3")));
  CHECK(cantor_contains(0));
  CHECK(cantor_contains(1));
  CHECK_FALSE(cantor_contains(q("1/2")));
  CHECK_FALSE(cantor_contains(q("5/9")));
  CHECK_FALSE(cantor_contains(q("-1/3")));
  // Oracle: run the expanding dynamics for a fixed number of steps; on
  // denominators 4 * 3^k the orbit is periodic after k steps.
  for (int k = 0; k < 4; ++k) {
    long den = 4;
    for (int i = 0; i < k; ++i) den *= 3;
    for (long p = 0; p <= den; ++p) {
      const Rational x = frac(p, den);
      bool inside = true;
      Rational y = x;
      for (int step = 0; step < 40 && inside; ++step) {
        if (y <= Rational(1, 3)) y *= 3;
        else if (y >= Rational(2, 3)) y = 3 * y - 2;
        else inside = false;
      }
      CHECK(cantor_contains(x) == inside);
    }
  }
}

TEST_CASE("ifs validation") {
  CHECK_THROWS_AS(AffineIfs(BoxSpace{{{0, 1}}}, {AffineMap::scalar(2, 0)}), ConfigError);
  CHECK_THROWS_AS(AffineIfs(BoxSpace{{{0, 1}}}, {}), ConfigError);
  CHECK_THROWS_AS(AffineIfs(CantorSpace{}, {AffineMap::scalar(q("1/2"), 0)}), ConfigError);
  CHECK_THROWS_AS(cantor().map(3), ConfigError);
  const auto b = contraction_bounds(AffineMap::scalar(q("-1/2"), 1));
  CHECK(b.proper);
  CHECK(*b.exact == q("1/2"));
  CHECK(b.low <= 0.5);
  CHECK(b.high >= 0.5);
  RationalMatrix m(2, 2);
  m(0, 0) = q("1/2");
  m(1, 1) = q("1/3");
  const auto b2 = contraction_bounds(AffineMap(m, {0, 0}));
  CHECK(b2.proper);
  CHECK(b2.high >= 0.5);
  CHECK(b2.low <= 0.5);
}

TEST_CASE("cantor image cells") {
  auto cell = cantor_image_cell(AffineMap::scalar(q("1/9"), q("2/9")));
  REQUIRE(cell);
  CHECK(cell->lo == q("2/9"));
  CHECK(cell->hi == q("1/3"));
  CHECK_FALSE(cantor_image_cell(AffineMap::scalar(q("1/9"), q("1/9"))));
  CHECK_FALSE(cantor_image_cell(AffineMap::scalar(q("1/2"), 0)));
}

TEST_CASE("regions and cantor intersection witnesses") {
  CHECK(cantor_meets(Interval::open(q("1/3"), q("2/3"))) == std::nullopt);
  auto w = cantor_meets(Interval::closed(q("1/3"), q("2/3")));
  REQUIRE(w);
  CHECK(cantor_contains(*w));
  CHECK(cantor_meets(Interval::open(q("7/9"), q("8/9"))) == std::nullopt);
  auto w2 = cantor_meets(Interval::open(q("1/10"), q("1/5")));
  REQUIRE(w2);
  CHECK(cantor_contains(*w2));
  CHECK(*w2 > q("1/10"));
  CHECK(*w2 < q("1/5"));
  const Region r = image_region(AffineMap::scalar(q("-1/2"), 1), Region{{Interval::open(0, 1)}});
  CHECK(r.sides[0].lo == q("1/2"));
  CHECK(r.sides[0].hi == 1);
  CHECK_FALSE(r.sides[0].lo_closed);
  CHECK(uncovered_open_cell(BoxSpace{{{0, 1}}}, {Region{{Interval::open(0, 1)}}}) == std::nullopt);
  CHECK(uncovered_open_cell(BoxSpace{{{0, 1}}}, {Region{{Interval::open(0, q("1/2"))}}}).has_value());
}

TEST_CASE("open boxes parse") {
  const OpenBox b = parse_open_box("(0,1)x(1/4,3/4)");
  CHECK(b.sides.size() == 2);
  CHECK(b.contains(Point{q("1/2"), q("1/2")}));
  CHECK_FALSE(b.contains(Point{q("1/2"), q("3/4")}));
  CHECK(to_string(b) == "(0,1)x(1/4,3/4)");
  CHECK_THROWS_AS(parse_open_box("(1,0)"), ParseError);
  CHECK_THROWS_AS(parse_open_box("[0,1]"), ParseError);
}

TEST_CASE("polynomial grammar") {
  const ChainFn f = ChainFn::parse("t1^2 - 2*i*t0 + 1/3", 1, 1);
  const Point pts[2] = {pt("1/2"), pt("3")};
  CHECK(f.evaluate(pts) == ComplexRational(q("1/4") + q("1/3"), -6));
  CHECK_THROWS_AS(ChainFn::parse("t2", 1, 1), ParseError);
  CHECK_THROWS_AS(ChainFn::parse("t1 +", 1, 1), ParseError);
  CHECK_THROWS_AS(ChainFn::parse("(t1", 1, 1), ParseError);
  const ChainFn g = ChainFn::parse("t1_0*t0_1", 1, 2);
  const Point p2[2] = {Point{2, 3}, Point{5, 7}};
  CHECK(g.evaluate(p2) == ComplexRational(14));
  CHECK(ChainFn::parse(to_string(f), 1, 1) == f);
}

TEST_CASE("boxdot examples") {
  const ChainFn one1 = ChainFn::constant(1, 1, 1);
  CHECK(boxdot(one1, one1) == ChainFn::constant(2, 1, 1));
  // (x2, x1, x0) -> x2 * x0
  const ChainFn prod = boxdot(ChainFn::parse("t1", 1, 1), ChainFn::parse("t0", 1, 1));
  CHECK(prod == ChainFn::parse("t2*t0", 2, 1));
  // f on X_0 reads the top coordinate
  CHECK(boxdot(ChainFn::parse("t0", 0, 1), ChainFn::constant(2, 1, 1)) == ChainFn::parse("t2", 2, 1));
}

TEST_CASE("boxtimes examples") {
  const ChainFn one = ChainFn::constant(1, 1, 1);
  CHECK(boxtimes(one, one) == BichainFn::constant(1, 1, 1, 1));
  CHECK(boxtimes(one, ChainFn::constant(1, 1, ComplexRational::i())) ==
        BichainFn::constant(1, 1, 1, -ComplexRational::i()));
  CHECK(boxtimes(ChainFn::parse("t1", 1, 1), ChainFn::parse("t1", 1, 1)) == BichainFn::parse("x1*y1", 1, 1, 1));
}

TEST_CASE("boxdot is associative (fuzz)") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = static_cast<std::size_t>(rng.between(0, 2));
    const auto b = static_cast<std::size_t>(rng.between(0, 2));
    const auto c = static_cast<std::size_t>(rng.between(0, 2));
    const ChainFn f = random_chain_fn(rng, a, 1, 2);
    const ChainFn g = random_chain_fn(rng, b, 1, 2);
    const ChainFn h = random_chain_fn(rng, c, 1, 2);
    CHECK(boxdot(boxdot(f, g), h) == boxdot(f, boxdot(g, h)));
  }
}

TEST_CASE("boxdot agrees with its defining formula pointwise (fuzz)") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const ChainFn f = random_chain_fn(rng, 1, 1, 2);
    const ChainFn g = random_chain_fn(rng, 1, 1, 2);
    std::vector<Point> pts;
    for (int i = 0; i < 3; ++i) pts.push_back(Point{random_rational(rng, 9, 9)});
    const std::span<const Point> all(pts);
    CHECK(boxdot(f, g).evaluate(all) == f.evaluate(all.subspan(0, 2)) * g.evaluate(all.subspan(1, 2)));
    const BichainFn t = boxtimes(f, g);
    const Point l[2] = {pts[0], pts[2]};
    const Point r[2] = {pts[1], pts[2]};
    CHECK(t.evaluate(l, r) == f.evaluate(l) * g.evaluate(r).conj());
    CHECK(t.swapped_conjugate().evaluate(r, l) == t.evaluate(l, r).conj());
  }
}
