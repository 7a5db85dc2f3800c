#include <cmath>

#include "doctest.h"
#include "floatlab/bodies.hpp"
#include "floatlab/errors.hpp"
#include "floatlab/radon.hpp"
#include "oracles.hpp"

using namespace floatlab;

TEST_CASE("spherical radon of simple integrands") {
  // constant: total weight of the great circle is 2 pi
  CHECK(spherical_radon([](Vec3) { return 3.0; }, {0, 0, 1}) ==
        doctest::Approx(6.0 * oracle::kPi).epsilon(1e-12));
  // <x,e3>^2 vanishes on the equator
  CHECK(spherical_radon([](Vec3 x) { return x.z * x.z; }, {0, 0, 1}) ==
        doctest::Approx(0.0).epsilon(1e-14));
  // <x,e1>^2 integrates to pi on the equator
  CHECK(spherical_radon([](Vec3 x) { return x.x * x.x; }, {0, 0, 1}) ==
        doctest::Approx(oracle::kPi).epsilon(1e-10));
  // tilted circle, same answer by symmetry of |x|^2 = 1
  const Vec3 u = normalized(Vec3{1, 2, -0.5});
  CHECK(spherical_radon([](Vec3 x) { return norm2(x); }, u) ==
        doctest::Approx(2.0 * oracle::kPi).epsilon(1e-12));
}

TEST_CASE("spherical radon rejects tiny quadratures") {
  try {
    spherical_radon([](Vec3) { return 1.0; }, {0, 0, 1}, 8);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_few_samples);
  }
}

TEST_CASE("radon of the fourth-power radial function on the ball") {
  // r_K == 1 on the sphere: the transform equals the circle weight 2 pi
  const double v = radial_radon_pow4(oracle::ball10k(), {0, 0, 1});
  CHECK(v == doctest::Approx(2.0 * oracle::kPi).epsilon(2e-3));
}

TEST_CASE("section route matches direct radial-function quadrature") {
  // same quadrature nodes, two different evaluation paths
  const int q = 256;
  for (const auto& K : {make_cube(2.0), random_hull3(50, 41)}) {
    ConvexPolytope C = K;
    const Vec3 c = moments(C).centroid;
    for (Vec3& p : C.v) p -= c;  // radial evaluation needs the origin inside
    for (const Vec3& u : {Vec3{0, 0, 1}, normalized(Vec3{1, -1, 0.3})}) {
      const double via_section = radial_radon_pow4(C, u, q);
      const double via_rays = spherical_radon(
          [&](Vec3 xi) {
            const double r = radial_function(C, xi);
            return r * r * r * r;
          },
          u, q);
      CHECK(via_section == doctest::Approx(via_rays).epsilon(1e-9));
    }
  }
}

TEST_CASE("central section moments of the ball and the cube") {
  // unit disk section: pi/4 for any tangent v
  CHECK(central_section_moment(oracle::ball10k(), {0, 0, 1}, {1, 0, 0}) ==
        doctest::Approx(oracle::kPi / 4.0).epsilon(5e-3));
  // cube central section z=0 is the square [-1,1]^2: ∫ x^2 = 4/3
  CHECK(central_section_moment(make_cube(2.0), {0, 0, 1}, {1, 0, 0}) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  // diagonal-normal section of the cube is a regular hexagon; for v = any
  // in-plane direction the centered second moment is 8*sqrt(2)/3... probe the
  // two closed forms around u = (1,1,0)/sqrt(2)
  const Vec3 u = normalized(Vec3{1, 1, 0});
  const double m_ez = central_section_moment(make_cube(2.0), u, {0, 0, 1});
  CHECK(m_ez == doctest::Approx(4.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));
  const Vec3 w = normalized(cross(u, Vec3{0, 0, 1}));
  const double m_in = central_section_moment(make_cube(2.0), u, w);
  CHECK(m_in == doctest::Approx(8.0 * std::sqrt(2.0) / 3.0).epsilon(1e-12));
}

TEST_CASE("central section moment enforces its preconditions") {
  try {
    central_section_moment(translated(make_cube(2.0), {0.5, 0, 0}), {0, 0, 1}, {1, 0, 0});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == errc::asymmetric_body);
  }
  try {
    central_section_moment(make_cube(2.0), {0, 0, 1}, normalized(Vec3{0.2, 0, 1}));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_input);
  }
}

TEST_CASE("isotropy verdict: ball passes with a tiny identity gap") {
  const ConvexPolytope B = make_ball(1.0, 4096);
  const Theorem2Report r = theorem2_report(B, fibonacci_sphere(128), 8);
  CHECK(r.is_ball);
  CHECK(r.spread < 2e-2);
  CHECK(r.max_identity_gap < 2e-2);
  CHECK(r.mean == doctest::Approx(oracle::kPi / 4.0).epsilon(5e-3));
  CHECK(r.rows.size() == 128 * 8);
}

TEST_CASE("isotropy verdict: cube fails with the known moment bracket") {
  const Theorem2Report r = theorem2_report(make_cube(2.0), fibonacci_sphere(256), 8);
  CHECK(!r.is_ball);
  CHECK(r.min >= 4.0 / 3.0 - 1e-9);
  CHECK(r.max <= 8.0 * std::sqrt(2.0) / 3.0 + 1e-9);
  CHECK(r.spread > 0.5);
}

TEST_CASE("isotropy verdict: ellipsoid fails") {
  const ConvexPolytope E = make_ellipsoid(1.5, 1.0, 0.75, 4096);
  const Theorem2Report r = theorem2_report(E, fibonacci_sphere(128), 8);
  CHECK(!r.is_ball);
}

TEST_CASE("identity gap ties the section moments to the radon transform") {
  // on any centered body the mean tangent moment equals R(r^4)/8 up to
  // quadrature error; the per-direction gap is recorded in each row
  const ConvexPolytope P = [] {
    ConvexPolytope Q = random_hull3(60, 19);
    const Vec3 c = moments(Q).centroid;
    for (Vec3& p : Q.v) p -= c;
    return Q;
  }();
  const Theorem2Report r = theorem2_report(P, fibonacci_sphere(64), 32, 5e-2, 1024);
  CHECK(r.max_identity_gap < 5e-3);
}

TEST_CASE("serial and parallel reports are bitwise identical") {
  const ConvexPolytope B = make_ball(1.0, 2048);
  const auto dirs = fibonacci_sphere(64);
  const Theorem2Report a = theorem2_report(B, dirs, 8, 5e-2, 256, Exec::Serial);
  const Theorem2Report b = theorem2_report(B, dirs, 8, 5e-2, 256, Exec::Parallel);
  REQUIRE(a.rows.size() == b.rows.size());
  CHECK(a.mean == b.mean);
  CHECK(a.spread == b.spread);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].value == b.rows[i].value);
    CHECK(a.rows[i].radon_r4 == b.rows[i].radon_r4);
  }
}
