#include "floatlab/chordchain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "floatlab/errors.hpp"

namespace floatlab {

namespace {

// least distance from the origin to an edge line of K; the inscribed-disk
// radius when the origin is interior
double origin_clearance(const ConvexPolygon& K) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = K.v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = K.v[i];
    const Vec2& b = K.v[(i + 1) % n];
    const double len = norm(b - a);
    if (len <= 0.0) continue;
    best = std::min(best, cross(b - a, Vec2{} - a) / len);
  }
  return best;
}

}  // namespace

std::pair<Vec2, Vec2> chord_step(Vec2 p, double r, int orientation) {
  const double d = norm(p);
  if (!(d > r)) fail(errc::inside_disk, "point lies inside the tangent disk");
  const double theta = std::acos(r / d);
  const double phi = std::atan2(p.y, p.x);
  const double sign = orientation >= 0 ? 1.0 : -1.0;
  const double a = phi + sign * theta;
  const Vec2 m{r * std::cos(a), r * std::sin(a)};
  return {m, m * 2.0 - p};
}

Vec2 boundary_point(const ConvexPolygon& K, double angle) {
  if (is_empty(K)) fail(errc::empty_body, "body is empty");
  const Vec2 d{std::cos(angle), std::sin(angle)};
  const std::size_t n = K.v.size();
  double best = -1.0;
  Vec2 hit{};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = K.v[i];
    const Vec2& b = K.v[(i + 1) % n];
    const Vec2 e = b - a;
    const double den = cross(d, e);
    if (std::abs(den) <= 1e-300) continue;
    const double w = -cross(d, a) / den;
    if (w < -1e-12 || w > 1.0 + 1e-12) continue;
    const Vec2 p = a + e * w;
    const double r = dot(d, p);
    if (r > best) {
      best = r;
      hit = p;
    }
  }
  if (best <= 0.0) fail(errc::degenerate_input, "origin is not interior to the body");
  return hit;
}

ChainState chain_run(const ConvexPolygon& K, double r, Vec2 p0, int steps,
                     int orientation) {
  if (is_empty(K)) fail(errc::empty_body, "body is empty");
  if (!(r > 0.0)) fail(errc::degenerate_input, "disk radius must be positive");
  const double scale = diameter(K);
  if (origin_clearance(K) <= r) {
    fail(errc::inside_disk, "disk of radius r must sit strictly inside the body");
  }
  if (boundary_distance(K, p0) > 1e-9 * std::max(1.0, scale)) {
    fail(errc::degenerate_input, "start point must lie on the boundary");
  }
  ChainState st;
  st.points.reserve(static_cast<std::size_t>(steps) + 1);
  st.midpoints.reserve(static_cast<std::size_t>(steps));
  st.radii.reserve(static_cast<std::size_t>(steps) + 1);
  st.points.push_back(p0);
  st.radii.push_back(norm(p0));
  Vec2 p = p0;
  for (int i = 0; i < steps; ++i) {
    auto [m, q] = chord_step(p, r, orientation);
    st.midpoints.push_back(m);
    st.points.push_back(q);
    st.radii.push_back(norm(q));
    st.closure_defect = std::max(st.closure_defect, boundary_distance(K, q));
    p = q;
  }
  return st;
}

}  // namespace floatlab
