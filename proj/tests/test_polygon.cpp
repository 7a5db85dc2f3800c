#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "floatlab/bodies.hpp"
#include "floatlab/errors.hpp"
#include "floatlab/polygon.hpp"
#include "oracles.hpp"

using namespace floatlab;

namespace {

ConvexPolygon unit_square() {
  ConvexPolygon P;
  P.v = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  return P;
}

ConvexPolygon centered_square() {
  ConvexPolygon P;
  P.v = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  return P;
}

}  // namespace

TEST_CASE("build_polygon hulls, orients, and dedups") {
  const std::vector<Vec2> pts = {{1, 1}, {0, 0}, {1, 0},    {0, 1},
                                 {0.5, 0.5},                 // interior
                                 {1, 0}, {0, 1},             // duplicates
                                 {0.5, 0}, {1, 0.5}};        // edge-collinear
  const ConvexPolygon P = build_polygon(pts);
  CHECK(P.v.size() == 4);
  double area2 = 0.0;
  for (std::size_t i = 0; i < P.v.size(); ++i) {
    area2 += cross(P.v[i], P.v[(i + 1) % P.v.size()]);
  }
  CHECK(area2 == doctest::Approx(2.0));  // CCW orientation, area 1
}

TEST_CASE("build_polygon rejects degenerate input") {
  try {
    build_polygon({{0, 0}, {1, 1}});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_input);
  }
  try {
    build_polygon({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_input);
  }
}

TEST_CASE("clip of the unit square against a vertical halfplane") {
  const ConvexPolygon P = unit_square();
  const ConvexPolygon upper = clip(P, Halfspace2{{1, 0}, 0.5, true});
  CHECK(moments(upper).measure == doctest::Approx(0.5));
  for (const Vec2& v : upper.v) CHECK(v.x >= 0.5 - 1e-12);

  const ConvexPolygon nothing = clip(P, Halfspace2{{1, 0}, 2.0, true});
  CHECK(is_empty(nothing));
  const ConvexPolygon all = clip(P, Halfspace2{{1, 0}, -2.0, true});
  CHECK(moments(all).measure == doctest::Approx(1.0));
}

TEST_CASE("clip exactly through vertices keeps the body watertight") {
  const ConvexPolygon P = centered_square();
  // diagonal through (1,-1) and (-1,1)
  const ConvexPolygon half = clip(P, Halfspace2{{1, 1}, 0.0, true});
  CHECK(moments(half).measure == doctest::Approx(2.0));
  CHECK(half.v.size() == 3);
}

TEST_CASE("moments of simple bodies match closed forms") {
  const Moments2 sq = moments(centered_square());
  CHECK(sq.measure == doctest::Approx(4.0));
  CHECK(sq.centroid.x == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sq.sxx == doctest::Approx(4.0 / 3.0));
  CHECK(sq.syy == doctest::Approx(4.0 / 3.0));
  CHECK(sq.sxy == doctest::Approx(0.0).epsilon(1e-14));

  ConvexPolygon tri;
  tri.v = {{0, 0}, {1, 0}, {0, 1}};
  const Moments2 tm = moments(tri);
  CHECK(tm.measure == doctest::Approx(0.5));
  CHECK(tm.centroid.x == doctest::Approx(1.0 / 3.0));
  CHECK(tm.centroid.y == doctest::Approx(1.0 / 3.0));
  CHECK(tm.sxx == doctest::Approx(1.0 / 12.0));
  CHECK(tm.sxy == doctest::Approx(1.0 / 24.0));
}

TEST_CASE("moments agree with Monte Carlo on a random hull") {
  const ConvexPolygon P = random_hull2(40, 7);
  const Moments2 m = moments(P);
  const auto mc = oracle::mc_moments2(P, 400000, 11);
  CHECK(m.measure == doctest::Approx(mc.measure).epsilon(5e-3));
  CHECK(m.centroid.x == doctest::Approx(mc.cx).epsilon(2e-2));
  CHECK(m.centroid.y == doctest::Approx(mc.cy).epsilon(2e-2));
  CHECK(m.sxx == doctest::Approx(mc.sxx).epsilon(2e-2));
  CHECK(m.syy == doctest::Approx(mc.syy).epsilon(2e-2));
}

TEST_CASE("moments is translation covariant in the second moments") {
  const ConvexPolygon P = random_hull2(25, 3);
  const ConvexPolygon Q = translated(P, {1.75, -0.5});
  const Moments2 mp = moments(P);
  const Moments2 mq = moments(Q);
  const double shift = 1.75;
  CHECK(mq.measure == doctest::Approx(mp.measure).epsilon(1e-13));
  CHECK(mq.sxx == doctest::Approx(mp.sxx + 2 * shift * mp.centroid.x * mp.measure +
                                  shift * shift * mp.measure)
                      .epsilon(1e-12));
}

TEST_CASE("section and section_moments on known chords") {
  const ConvexPolygon P = centered_square();
  const Section2 s = section(P, {1, 0}, 0.25);
  CHECK(s.hi - s.lo == doctest::Approx(2.0));
  const SegmentMoments sm = section_moments(s);
  CHECK(sm.measure == doctest::Approx(2.0));
  CHECK(sm.centroid == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(sm.s2 == doctest::Approx(2.0 / 3.0));

  try {
    section(P, {1, 0}, 5.0);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == errc::empty_section);
  }
}

TEST_CASE("support, containment, boundary distance") {
  const ConvexPolygon P = centered_square();
  CHECK(support_value(P, {1, 0}) == doctest::Approx(1.0));
  CHECK(support_value(P, normalized(Vec2{1, 1})) == doctest::Approx(std::sqrt(2.0)));
  CHECK(contains(P, {0.5, -0.5}, 0.0));
  CHECK(!contains(P, {1.001, 0.0}, 0.0));
  CHECK(contains(P, {1.001, 0.0}, 0.01));
  CHECK(boundary_distance(P, {0.25, 0.0}) == doctest::Approx(0.75));
  CHECK(boundary_distance(P, {2.0, 0.0}) == doctest::Approx(1.0));
}

TEST_CASE("PolygonDirScan caps agree with clip + moments") {
  const ConvexPolygon P = random_hull2(30, 21);
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const double a = rng.range(0.0, 2.0 * oracle::kPi);
    const Vec2 u{std::cos(a), std::sin(a)};
    const PolygonDirScan ds(P, u);
    const double t = rng.range(ds.lo(), ds.hi());
    const auto ce = ds.cap(t);
    const ConvexPolygon capped = clip(P, Halfspace2{u, t, true});
    const Moments2 ref = is_empty(capped) ? Moments2{} : moments(capped);
    CHECK(ce.vol == doctest::Approx(ref.measure).epsilon(1e-10));
    const Moments2 cm = ds.cap_moments(t);
    CHECK(cm.measure == doctest::Approx(ref.measure).epsilon(1e-10));
    if (ref.measure > 1e-12) {
      CHECK(cm.centroid.x == doctest::Approx(ref.centroid.x).epsilon(1e-8));
      CHECK(cm.centroid.y == doctest::Approx(ref.centroid.y).epsilon(1e-8));
      CHECK(cm.sxx == doctest::Approx(ref.sxx).epsilon(1e-8));
    }
  }
}

TEST_CASE("cap slice length matches the section chord") {
  const ConvexPolygon P = oracle::disk4096();
  const PolygonDirScan ds(P, {1, 0});
  const auto ce = ds.cap(0.6);
  // unit-disk chord at height 0.6 has length 2*sqrt(1-0.36) = 1.6
  CHECK(ce.slice == doctest::Approx(1.6).epsilon(1e-5));
}

TEST_CASE("diameter is the bounding box diagonal") {
  CHECK(diameter(centered_square()) == doctest::Approx(2.0 * std::sqrt(2.0)));
}
