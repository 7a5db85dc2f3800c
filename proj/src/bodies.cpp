#include "floatlab/bodies.hpp"

#include <cmath>
#include <numbers>

#include "floatlab/errors.hpp"

namespace floatlab {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

void check_count(int n, int least, const char* what) {
  if (n < least) fail(errc::degenerate_input, std::string("too few ") + what);
}

// shift a polytope so its centroid sits exactly at the origin
ConvexPolytope recentred(ConvexPolytope P) {
  const Vec3 c = moments(P).centroid;
  for (Vec3& p : P.v) p -= c;
  return P;
}

Vec3 rotate_about(Vec3 p, Vec3 axis, double angle) {
  const Vec3 a = normalized(axis);
  const double c = std::cos(angle), s = std::sin(angle);
  return p * c + cross(a, p) * s + a * (dot(a, p) * (1.0 - c));
}

}  // namespace

std::vector<Vec2> uniform_directions2(int m) {
  check_count(m, 3, "directions");
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double a = kTau * static_cast<double>(k) / static_cast<double>(m);
    out.push_back({std::cos(a), std::sin(a)});
  }
  return out;
}

std::vector<Vec3> fibonacci_sphere(int n) {
  check_count(n, 4, "directions");
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(n));
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = golden * static_cast<double>(i);
    out.push_back({rho * std::cos(a), rho * std::sin(a), z});
  }
  return out;
}

ConvexPolygon make_regular_polygon(int m, double circumradius) {
  check_count(m, 3, "vertices");
  ConvexPolygon P;
  P.v.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double a = kTau * static_cast<double>(k) / static_cast<double>(m);
    P.v.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
  }
  return P;
}

ConvexPolygon make_disk(double radius, int resolution) {
  return make_regular_polygon(resolution, radius);
}

ConvexPolygon make_ellipse(double a, double b, int resolution) {
  check_count(resolution, 3, "vertices");
  ConvexPolygon P;
  P.v.reserve(static_cast<std::size_t>(resolution));
  for (int k = 0; k < resolution; ++k) {
    const double t = kTau * static_cast<double>(k) / static_cast<double>(resolution);
    P.v.push_back({a * std::cos(t), b * std::sin(t)});
  }
  return P;
}

ConvexPolygon make_square(double side) {
  const double h = 0.5 * side;
  ConvexPolygon P;
  P.v = {{-h, -h}, {h, -h}, {h, h}, {-h, h}};
  return P;
}

ConvexPolygon make_simplex2(double side) {
  const double rc = side / std::sqrt(3.0);
  ConvexPolygon P;
  for (int k = 0; k < 3; ++k) {
    const double a = std::numbers::pi / 2.0 + kTau * static_cast<double>(k) / 3.0;
    P.v.push_back({rc * std::cos(a), rc * std::sin(a)});
  }
  return build_polygon(P.v);
}

ConvexPolygon random_hull2(int count, std::uint64_t seed) {
  check_count(count, 3, "points");
  Rng rng(seed);
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(count));
  while (pts.size() < static_cast<std::size_t>(count)) {
    const double x = rng.range(-1.0, 1.0);
    const double y = rng.range(-1.0, 1.0);
    if (x * x + y * y <= 1.0) pts.push_back({x, y});
  }
  return build_polygon(pts);
}

ConvexPolytope make_box(Vec3 lo, Vec3 hi) {
  ConvexPolytope B;
  B.v = {{lo.x, lo.y, lo.z}, {hi.x, lo.y, lo.z}, {hi.x, hi.y, lo.z}, {lo.x, hi.y, lo.z},
         {lo.x, lo.y, hi.z}, {hi.x, lo.y, hi.z}, {hi.x, hi.y, hi.z}, {lo.x, hi.y, hi.z}};
  B.f = {{0, 2, 1}, {0, 3, 2},   // bottom
         {4, 5, 6}, {4, 6, 7},   // top
         {0, 1, 5}, {0, 5, 4},   // front
         {1, 2, 6}, {1, 6, 5},   // right
         {2, 3, 7}, {2, 7, 6},   // back
         {3, 0, 4}, {3, 4, 7}};  // left
  return B;
}

ConvexPolytope make_cube(double side) {
  const double h = 0.5 * side;
  return make_box({-h, -h, -h}, {h, h, h});
}

ConvexPolytope make_ball(double radius, int resolution) {
  std::vector<Vec3> pts = fibonacci_sphere(resolution);
  for (Vec3& p : pts) p = p * radius;
  return recentred(build_polytope(pts));
}

ConvexPolytope make_ellipsoid(double a, double b, double c, int resolution) {
  std::vector<Vec3> pts = fibonacci_sphere(resolution);
  for (Vec3& p : pts) p = {a * p.x, b * p.y, c * p.z};
  return recentred(build_polytope(pts));
}

ConvexPolytope make_simplex3(double side) {
  const double s = side / (2.0 * std::sqrt(2.0));
  const std::vector<Vec3> pts = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  return build_polytope(pts);
}

ConvexPolytope random_hull3(int count, std::uint64_t seed) {
  check_count(count, 4, "points");
  Rng rng(seed);
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(count));
  while (pts.size() < static_cast<std::size_t>(count)) {
    const double x = rng.range(-1.0, 1.0);
    const double y = rng.range(-1.0, 1.0);
    const double z = rng.range(-1.0, 1.0);
    if (x * x + y * y + z * z <= 1.0) pts.push_back({x, y, z});
  }
  return build_polytope(pts);
}

ConvexPolygon translated(const ConvexPolygon& P, Vec2 t) {
  ConvexPolygon out = P;
  for (Vec2& p : out.v) p += t;
  return out;
}

ConvexPolygon rotated(const ConvexPolygon& P, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  ConvexPolygon out = P;
  for (Vec2& p : out.v) p = {c * p.x - s * p.y, s * p.x + c * p.y};
  return out;
}

ConvexPolytope translated(const ConvexPolytope& P, Vec3 t) {
  ConvexPolytope out = P;
  for (Vec3& p : out.v) p += t;
  return out;
}

ConvexPolytope rotated(const ConvexPolytope& P, Vec3 axis, double angle) {
  ConvexPolytope out = P;
  for (Vec3& p : out.v) p = rotate_about(p, axis, angle);
  return out;
}

ConvexPolygon linear_map(const ConvexPolygon& P, double a11, double a12, double a21,
                         double a22) {
  ConvexPolygon out = P;
  for (Vec2& p : out.v) p = {a11 * p.x + a12 * p.y, a21 * p.x + a22 * p.y};
  return out;
}

}  // namespace floatlab
