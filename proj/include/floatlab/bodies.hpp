#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "floatlab/polygon.hpp"
#include "floatlab/polytope.hpp"

namespace floatlab {

// deterministic RNG used by every seeded generator
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double u01() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double range(double a, double b) { return a + (b - a) * u01(); }
};

std::vector<Vec2> uniform_directions2(int m);          // angles 2*pi*k/m
std::vector<Vec3> fibonacci_sphere(int n);             // golden-angle spiral

ConvexPolygon make_regular_polygon(int m, double circumradius);
ConvexPolygon make_disk(double radius, int resolution);
ConvexPolygon make_ellipse(double a, double b, int resolution);
ConvexPolygon make_square(double side);                // [-side/2, side/2]^2
ConvexPolygon make_simplex2(double side);              // regular triangle, centroid at origin
ConvexPolygon random_hull2(int count, std::uint64_t seed);

ConvexPolytope make_box(Vec3 lo, Vec3 hi);
ConvexPolytope make_cube(double side);                 // [-side/2, side/2]^3
ConvexPolytope make_ball(double radius, int resolution);
ConvexPolytope make_ellipsoid(double a, double b, double c, int resolution);
ConvexPolytope make_simplex3(double side);             // regular tetrahedron, centroid at origin
ConvexPolytope random_hull3(int count, std::uint64_t seed);

ConvexPolygon translated(const ConvexPolygon& P, Vec2 t);
ConvexPolygon rotated(const ConvexPolygon& P, double angle);
ConvexPolytope translated(const ConvexPolytope& P, Vec3 t);
ConvexPolytope rotated(const ConvexPolytope& P, Vec3 axis, double angle);
ConvexPolygon linear_map(const ConvexPolygon& P, double a11, double a12, double a21, double a22);

}  // namespace floatlab
