#pragma once

#include <vector>

#include "floatlab/floating.hpp"

namespace floatlab {

struct MetronoidSample2 {
  Vec2 u{};
  Vec2 point{};  // cap centroid X(u)
};

struct MetronoidSample3 {
  Vec3 u{};
  Vec3 point{};
};

// Centered second moment of the section K ∩ {<x,u> = t(u,delta)} in the
// tangent direction v: ∫ <x,v>^2 - <g,v>^2 * measure, g the section centroid.
double isotropy_moment(const ConvexPolygon& K, double delta, Vec2 u, Vec2 v,
                       double tol = kVolumeTol);
double isotropy_moment(const ConvexPolytope& K, double delta, Vec3 u, Vec3 v,
                       double tol = kVolumeTol);

std::vector<MetronoidSample2> metronoid_boundary(const ConvexPolygon& K, double delta,
                                                 const std::vector<Vec2>& directions,
                                                 double tol = kVolumeTol,
                                                 Exec exec = Exec::Parallel);
std::vector<MetronoidSample3> metronoid_boundary(const ConvexPolytope& K, double delta,
                                                 const std::vector<Vec3>& directions,
                                                 double tol = kVolumeTol,
                                                 Exec exec = Exec::Parallel);

// max |<T_i, u_i>| over central-difference boundary tangents T_i; samples
// must be ordered by angle with small gaps
double gauss_map_residual(const std::vector<MetronoidSample2>& samples);

// R(phi) = m(u, T) / (delta * area), u = (cos phi, sin phi), T = perp(u)
double curvature_radius_2d(const ConvexPolygon& K, double delta, double phi,
                           double tol = kVolumeTol);

struct UlamSample2 {
  Vec2 u{};
  Vec2 v{};
  double value = 0.0;
};

struct UlamSample3 {
  Vec3 u{};
  Vec3 v{};
  double value = 0.0;
};

struct UlamStats {
  double min = 0.0, max = 0.0, mean = 0.0;
  double spread = 0.0;      // (max - min) / mean
  double r_estimate = 0.0;  // mean / (delta * vol(K))
  double threshold = 0.0;
  bool consistent = false;  // spread < threshold
};

struct UlamReport2 {
  double delta = 0.0;
  UlamStats stats;
  std::vector<UlamSample2> samples;
};

struct UlamReport3 {
  double delta = 0.0;
  UlamStats stats;
  std::vector<UlamSample3> samples;
};

// 2D uses the single tangent perp(u) per direction; tangents is ignored.
UlamReport2 ulam_report(const ConvexPolygon& K, double delta,
                        const std::vector<Vec2>& directions, int tangents = 1,
                        double threshold = 1e-2, double tol = kVolumeTol,
                        Exec exec = Exec::Parallel);
// 3D probes `tangents` equispaced tangent directions per u.
UlamReport3 ulam_report(const ConvexPolytope& K, double delta,
                        const std::vector<Vec3>& directions, int tangents = 16,
                        double threshold = 1e-2, double tol = kVolumeTol,
                        Exec exec = Exec::Parallel);

}  // namespace floatlab
