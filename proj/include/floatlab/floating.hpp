#pragma once

#include <vector>

#include "floatlab/parallel.hpp"
#include "floatlab/polygon.hpp"
#include "floatlab/polytope.hpp"

namespace floatlab {

// default relative tolerance of the cap volume-fraction solve
inline constexpr double kVolumeTol = 1e-12;

struct CutRecord2 {
  Vec2 u{};
  double delta = 0.0;
  double offset = 0.0;  // solved cut level t
  Moments2 cap;         // moments of K ∩ {<x,u> >= t}
  Vec2 cap_centroid{};  // X_{K,delta}(u)
  Section2 sec;
  SegmentMoments sec_moments;
};

struct CutRecord3 {
  Vec3 u{};
  double delta = 0.0;
  double offset = 0.0;
  Moments3 cap;
  Vec3 cap_centroid{};
  Section3 sec;
  Moments2 sec_moments;  // in-frame moments of the section polygon
};

enum class BodyClass { Body, Point, Empty };

struct FloatingBody2 {
  double delta = 0.0;
  std::vector<Vec2> directions;
  std::vector<double> offsets;
  BodyClass kind = BodyClass::Empty;
  ConvexPolygon body;  // valid when kind == Body
  Vec2 point{};        // valid when kind == Point
};

struct FloatingBody3 {
  double delta = 0.0;
  std::vector<Vec3> directions;
  std::vector<double> offsets;
  BodyClass kind = BodyClass::Empty;
  ConvexPolytope body;
  Vec3 point{};
};

// Solve <x,u> = t so that the cap {<x,u> >= t} holds a delta fraction of the
// volume; Newton on the monotone volume function safeguarded by bisection.
double cut_offset(const ConvexPolygon& K, Vec2 u, double delta, double tol = kVolumeTol);
double cut_offset(const ConvexPolytope& K, Vec3 u, double delta, double tol = kVolumeTol);
double cut_offset_scan(const PolygonDirScan& ds, double delta, double tol = kVolumeTol);
double cut_offset_scan(const PolytopeDirScan& ds, double delta, double tol = kVolumeTol);

CutRecord2 cap_record(const ConvexPolygon& K, Vec2 u, double delta, double tol = kVolumeTol);
CutRecord3 cap_record(const ConvexPolytope& K, Vec3 u, double delta, double tol = kVolumeTol);
CutRecord2 cap_record_scan(const PolygonDirScan& ds, double delta, double tol = kVolumeTol);
CutRecord3 cap_record_scan(const PolytopeDirScan& ds, double delta, double tol = kVolumeTol);

// Intersection of the lower halfspaces {<x,u_k> <= t_k} over the direction
// set, seeded with the bounding box of K and clipped sequentially.
FloatingBody2 floating_body(const ConvexPolygon& K, double delta,
                            const std::vector<Vec2>& directions,
                            double tol = kVolumeTol, Exec exec = Exec::Parallel);
FloatingBody3 floating_body(const ConvexPolytope& K, double delta,
                            const std::vector<Vec3>& directions,
                            double tol = kVolumeTol, Exec exec = Exec::Parallel);

// Largest delta with a non-empty floating body, by bisection on the
// emptiness predicate; centrally symmetric bodies short-circuit to 1/2.
double critical_delta(const ConvexPolygon& K, const std::vector<Vec2>& directions,
                      double tol = 1e-4, Exec exec = Exec::Parallel);
double critical_delta(const ConvexPolytope& K, const std::vector<Vec3>& directions,
                      double tol = 1e-4, Exec exec = Exec::Parallel);

// Distance between the support set of the computed floating body in
// direction u and the centroid of the section K ∩ {<x,u> = t(u,delta)}.
std::vector<double> dupin_tangency_residuals(const ConvexPolygon& K, double delta,
                                             const std::vector<Vec2>& directions,
                                             double tol = kVolumeTol,
                                             Exec exec = Exec::Parallel);
std::vector<double> dupin_tangency_residuals(const ConvexPolytope& K, double delta,
                                             const std::vector<Vec3>& directions,
                                             double tol = kVolumeTol,
                                             Exec exec = Exec::Parallel);
double dupin_tangency_residual(const ConvexPolygon& K, double delta, Vec2 u,
                               const std::vector<Vec2>& directions,
                               double tol = kVolumeTol);
double dupin_tangency_residual(const ConvexPolytope& K, double delta, Vec3 u,
                               const std::vector<Vec3>& directions,
                               double tol = kVolumeTol);

// central symmetry up to slack, tested via vertex reflection containment
bool is_centrally_symmetric(const ConvexPolygon& K, double slack);
bool is_centrally_symmetric(const ConvexPolytope& K, double slack);

}  // namespace floatlab
