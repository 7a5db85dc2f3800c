#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "floatlab/bodies.hpp"
#include "floatlab/errors.hpp"
#include "floatlab/floating.hpp"
#include "oracles.hpp"

using namespace floatlab;

TEST_CASE("cut_offset halves symmetric bodies at delta = 1/2") {
  CHECK(std::abs(cut_offset(oracle::disk4096(), Vec2{1, 0}, 0.5)) < 1e-12);
  CHECK(std::abs(cut_offset(make_square(2.0), normalized(Vec2{1, 1}), 0.5)) < 1e-12);
  CHECK(std::abs(cut_offset(make_cube(2.0), Vec3{0, 0, 1}, 0.5)) < 1e-12);
}

TEST_CASE("cut_offset on a square matches the linear cap profile") {
  // square [-1,1]^2, u = e1: cap {x >= t} has area 2*(1-t); delta*4 = 2*(1-t)
  const ConvexPolygon S = make_square(2.0);
  CHECK(cut_offset(S, {1, 0}, 0.25) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(cut_offset(S, {0, 1}, 0.125) == doctest::Approx(0.75).epsilon(1e-12));
  const ConvexPolytope C = make_cube(2.0);
  CHECK(cut_offset(C, {1, 0, 0}, 0.25) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("cut_offset on the disk matches the circular-segment equation") {
  const ConvexPolygon& D = oracle::disk4096();
  for (double delta : {0.25, 0.2, 0.1, 0.05}) {
    const double t = cut_offset(D, {1, 0}, delta);
    CHECK(t == doctest::Approx(oracle::disk_cut_root(delta)).epsilon(2e-6));
  }
  // direction invariance on a near-disk
  const double a = cut_offset(D, normalized(Vec2{0.6, -0.8}), 0.2);
  CHECK(a == doctest::Approx(oracle::disk_cut_root(0.2)).epsilon(2e-6));
}

TEST_CASE("cut_offset on the ball matches the spherical-cap equation") {
  const ConvexPolytope& B = oracle::ball10k();
  for (double delta : {0.3, 0.2, 0.1}) {
    const double t = cut_offset(B, {0, 0, 1}, delta);
    CHECK(t == doctest::Approx(oracle::ball_cut_root(delta)).epsilon(5e-4));
  }
}

TEST_CASE("cut_offset is monotone decreasing in delta") {
  const ConvexPolygon P = random_hull2(30, 2);
  double prev = cut_offset(P, {1, 0}, 0.01);
  for (double delta : {0.05, 0.1, 0.2, 0.3, 0.4, 0.5}) {
    const double t = cut_offset(P, {1, 0}, delta);
    CHECK(t < prev);
    prev = t;
  }
}

TEST_CASE("cut_offset rejects delta outside (0, 1/2]") {
  const ConvexPolygon S = make_square(2.0);
  for (double bad : {0.0, -0.1, 0.500001, 1.0}) {
    try {
      cut_offset(S, {1, 0}, bad);
      FAIL("expected a throw");
    } catch (const Error& e) {
      CHECK(e.code() == errc::invalid_delta);
    }
  }
}

TEST_CASE("cap_record centroids on closed-form bodies") {
  // square [-1,1]^2, u=e1, delta=1/4: cap is [1/2,1]x[-1,1], centroid (3/4, 0)
  const CutRecord2 r = cap_record(make_square(2.0), {1, 0}, 0.25);
  CHECK(r.offset == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.cap.measure == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.cap_centroid.x == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(std::abs(r.cap_centroid.y) < 1e-13);
  // section chord through x = 1/2 has length 2
  CHECK(r.sec_moments.measure == doctest::Approx(2.0).epsilon(1e-12));

  // disk at delta = 1/2: half-disk centroid at distance 4/(3*pi)
  const CutRecord2 h = cap_record(oracle::disk4096(), {0, 1}, 0.5);
  CHECK(norm(h.cap_centroid) == doctest::Approx(4.0 / (3.0 * oracle::kPi)).epsilon(1e-5));
  CHECK(h.cap_centroid.y > 0.0);

  // ball at delta = 1/2: half-ball centroid at distance 3/8
  const CutRecord3 b = cap_record(oracle::ball10k(), {0, 0, 1}, 0.5);
  CHECK(norm(b.cap_centroid) == doctest::Approx(3.0 / 8.0).epsilon(5e-3));
  CHECK(b.cap_centroid.z > 0.0);
}

TEST_CASE("cap centroid always lies strictly beyond the cut plane") {
  const ConvexPolytope P = random_hull3(40, 9);
  Rng rng(4);
  for (int i = 0; i < 10; ++i) {
    Vec3 u = normalized(Vec3{rng.range(-1, 1), rng.range(-1, 1), rng.range(-1, 1)});
    const CutRecord3 r = cap_record(P, u, rng.range(0.02, 0.5));
    CHECK(dot(r.cap_centroid, u) > r.offset);
  }
}

TEST_CASE("floating body of the disk is a concentric disk with the cut radius") {
  const ConvexPolygon& D = oracle::disk4096();
  const FloatingBody2 F = floating_body(D, 0.2, uniform_directions2(512));
  REQUIRE(F.kind == BodyClass::Body);
  const double r = oracle::disk_cut_root(0.2);
  for (const Vec2& v : F.body.v) CHECK(norm(v) == doctest::Approx(r).epsilon(1e-3));
}

TEST_CASE("floating body of the ball is a concentric ball with the cut radius") {
  const FloatingBody3 F =
      floating_body(oracle::ball10k(), 0.15, fibonacci_sphere(512));
  REQUIRE(F.kind == BodyClass::Body);
  const double r = oracle::ball_cut_root(0.15);
  double worst = 0.0;
  for (const Vec3& v : F.body.v) worst = std::max(worst, std::abs(norm(v) - r));
  CHECK(worst < 6e-3);
}

TEST_CASE("floating body collapses near the critical delta of the square") {
  const FloatingBody2 F = floating_body(make_square(2.0), 0.499, uniform_directions2(1024));
  if (F.kind == BodyClass::Body) {
    CHECK(diameter(F.body) < 0.05);
  } else {
    CHECK(F.kind == BodyClass::Point);
  }
}

TEST_CASE("two opposite directions carve a slab") {
  const ConvexPolygon S = make_square(2.0);
  const std::vector<Vec2> dirs = {{1, 0}, {-1, 0}};
  const FloatingBody2 F = floating_body(S, 0.5, dirs);
  REQUIRE(F.kind == BodyClass::Body);
  CHECK(support_value(F.body, {1, 0}) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(support_value(F.body, {-1, 0}) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(support_value(F.body, {0, 1}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(support_value(F.body, {0, -1}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("floating bodies nest as delta grows") {
  const ConvexPolygon P = random_hull2(40, 31);
  const FloatingBody2 inner = floating_body(P, 0.3, uniform_directions2(512));
  const FloatingBody2 outer = floating_body(P, 0.1, uniform_directions2(512));
  REQUIRE(inner.kind == BodyClass::Body);
  REQUIRE(outer.kind == BodyClass::Body);
  const double slack = 1e-9 * diameter(P);
  for (const Vec2& v : inner.body.v) CHECK(contains(outer.body, v, slack));
  for (const Vec2& v : outer.body.v) CHECK(contains(P, v, slack));
}

TEST_CASE("floating body construction is affinely equivariant") {
  const ConvexPolygon P = random_hull2(35, 8);
  const double a11 = 2.0, a12 = 1.0, a21 = 0.0, a22 = 1.0;  // det = 2
  const ConvexPolygon Q = linear_map(P, a11, a12, a21, a22);
  const auto dirs = uniform_directions2(1024);
  // normals map by the inverse transpose
  std::vector<Vec2> mapped;
  for (const Vec2& u : dirs) {
    // A^{-T} for [[2,1],[0,1]] is [[1/2,0],[-1/2,1]]
    mapped.push_back(normalized(Vec2{0.5 * u.x, -0.5 * u.x + u.y}));
  }
  const FloatingBody2 FP = floating_body(P, 0.2, dirs);
  const FloatingBody2 FQ = floating_body(Q, 0.2, mapped);
  REQUIRE(FP.kind == BodyClass::Body);
  REQUIRE(FQ.kind == BodyClass::Body);
  const double ratio = moments(FQ.body).measure / moments(FP.body).measure;
  CHECK(ratio == doctest::Approx(2.0).epsilon(5e-3));
}

TEST_CASE("floating body of a symmetric body is symmetric") {
  const ConvexPolygon S = rotated(make_square(2.0), 0.37);
  const FloatingBody2 F = floating_body(S, 0.3, uniform_directions2(512));
  REQUIRE(F.kind == BodyClass::Body);
  const Moments2 m = moments(F.body);
  const double slack = 1e-9 * diameter(S);
  CHECK(norm(m.centroid) < slack);
  for (const Vec2& v : F.body.v) {
    const Vec2 refl = m.centroid * 2.0 - v;
    CHECK(contains(F.body, refl, slack));
  }
}

TEST_CASE("serial and parallel floating bodies are bitwise identical") {
  const ConvexPolygon P = random_hull2(50, 17);
  const auto dirs = uniform_directions2(256);
  const FloatingBody2 a = floating_body(P, 0.22, dirs, kVolumeTol, Exec::Serial);
  const FloatingBody2 b = floating_body(P, 0.22, dirs, kVolumeTol, Exec::Parallel);
  REQUIRE(a.kind == b.kind);
  REQUIRE(a.offsets.size() == b.offsets.size());
  for (std::size_t i = 0; i < a.offsets.size(); ++i) CHECK(a.offsets[i] == b.offsets[i]);
  REQUIRE(a.body.v.size() == b.body.v.size());
  for (std::size_t i = 0; i < a.body.v.size(); ++i) {
    CHECK(a.body.v[i].x == b.body.v[i].x);
    CHECK(a.body.v[i].y == b.body.v[i].y);
  }
}

TEST_CASE("critical delta of the triangle is 4/9") {
  const double dc = critical_delta(make_simplex2(1.0), uniform_directions2(1024));
  CHECK(dc == doctest::Approx(4.0 / 9.0).epsilon(5e-3));
}

TEST_CASE("critical delta of symmetric bodies is exactly 1/2") {
  CHECK(critical_delta(make_square(2.0), uniform_directions2(512)) == 0.5);
  CHECK(critical_delta(make_cube(2.0), fibonacci_sphere(512)) == 0.5);
  // randomly generated centrally symmetric polygon
  Rng rng(6);
  std::vector<Vec2> pts;
  for (int i = 0; i < 20; ++i) {
    const Vec2 p{rng.range(-1, 1), rng.range(-1, 1)};
    pts.push_back(p);
    pts.push_back(-p);
  }
  const ConvexPolygon S = build_polygon(pts);
  CHECK(critical_delta(S, uniform_directions2(512)) == 0.5);
}

TEST_CASE("critical delta of the tetrahedron approaches 27/64") {
  const double dc = critical_delta(make_simplex3(1.0), fibonacci_sphere(2048));
  CHECK(dc >= 27.0 / 64.0 - 1e-4);      // never below the true value
  CHECK(dc == doctest::Approx(27.0 / 64.0).epsilon(5e-3));
}

TEST_CASE("floating_body reports Empty beyond the critical delta") {
  const FloatingBody2 F = floating_body(make_simplex2(1.0), 0.5, uniform_directions2(512));
  CHECK(F.kind == BodyClass::Empty);
}

TEST_CASE("dupin tangency residuals are tiny on smooth symmetric bodies") {
  const std::vector<double> rs =
      dupin_tangency_residuals(oracle::disk4096(), 0.3, uniform_directions2(128));
  REQUIRE(rs.size() == 128);
  for (double r : rs) CHECK(r < 1e-4);
}

TEST_CASE("dupin tangency residuals on polytopes stay below the verdict line") {
  const std::vector<double> rs2 =
      dupin_tangency_residuals(make_square(2.0), 0.1, uniform_directions2(64));
  for (double r : rs2) CHECK(r < 1e-3);
  const std::vector<double> rs3 =
      dupin_tangency_residuals(make_ellipse(2.0, 1.0, 2048), 0.25, uniform_directions2(64));
  for (double r : rs3) CHECK(r < 1e-3);
}

TEST_CASE("single-direction dupin residual matches the batch value") {
  const auto dirs = uniform_directions2(96);
  const std::vector<double> rs =
      dupin_tangency_residuals(make_square(2.0), 0.2, dirs);
  const double one = dupin_tangency_residual(make_square(2.0), 0.2, dirs[7], dirs);
  CHECK(one == doctest::Approx(rs[7]).epsilon(1e-9));
}

TEST_CASE("dupin residuals fail fast on an empty floating body") {
  try {
    dupin_tangency_residuals(make_simplex2(1.0), 0.5, uniform_directions2(256));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == errc::empty_floating_body);
  }
}

TEST_CASE("central symmetry detection") {
  const double slack2 = 1e-9 * diameter(make_square(2.0));
  CHECK(is_centrally_symmetric(make_square(2.0), slack2));
  CHECK(is_centrally_symmetric(translated(make_square(2.0), {3, -1}), slack2));
  CHECK(!is_centrally_symmetric(make_simplex2(1.0), 1e-9));
  CHECK(is_centrally_symmetric(make_cube(2.0), 1e-9 * diameter(make_cube(2.0))));
  CHECK(!is_centrally_symmetric(make_simplex3(1.0), 1e-9));
}

TEST_CASE("3D floating body radii follow the spherical-cap root") {
  const FloatingBody3 F = floating_body(oracle::ball10k(), 0.3, fibonacci_sphere(256));
  REQUIRE(F.kind == BodyClass::Body);
  const double r = oracle::ball_cut_root(0.3);
  double worst = 0.0;
  for (const Vec3& v : F.body.v) worst = std::max(worst, std::abs(norm(v) - r));
  CHECK(worst < 6e-3);
}
