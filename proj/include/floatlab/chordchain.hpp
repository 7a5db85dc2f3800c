#pragma once

#include <utility>
#include <vector>

#include "floatlab/polygon.hpp"

namespace floatlab {

struct ChainState {
  std::vector<Vec2> points;     // p_0 .. p_steps
  std::vector<Vec2> midpoints;  // tangency points m_i, one per step
  std::vector<double> radii;    // |p_i|, one per point
  double closure_defect = 0.0;  // max distance of an iterate to the boundary
};

// One bisecting chord step: the chord through p tangent to the disk of
// radius r, bisected at the tangency point m; returns (m, q = 2m - p).
// orientation +1 walks counterclockwise, -1 clockwise.
std::pair<Vec2, Vec2> chord_step(Vec2 p, double r, int orientation);

// Iterate chord_step along the boundary of K. Requires the disk of radius r
// to sit strictly inside K and p0 to lie on the boundary.
ChainState chain_run(const ConvexPolygon& K, double r, Vec2 p0, int steps,
                     int orientation = +1);

// boundary point hit by the ray from the origin at the given angle; the
// origin must be interior
Vec2 boundary_point(const ConvexPolygon& K, double angle);

}  // namespace floatlab
