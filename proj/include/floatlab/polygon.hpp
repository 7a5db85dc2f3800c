#pragma once

#include <vector>

#include "floatlab/vec.hpp"

namespace floatlab {

// Vertices in counterclockwise order. An empty vertex list is the empty body
// (a legal clipping result); one or two vertices is a degenerate remainder.
struct ConvexPolygon {
  std::vector<Vec2> v;
};

struct Moments2 {
  double measure = 0.0;  // area
  Vec2 centroid{};
  // integrals of x*x, x*y, y*y over the body (ambient coordinates)
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
};

// {x : <x, normal> >= offset} when keep_upper, else <= offset
struct Halfspace2 {
  Vec2 normal;
  double offset = 0.0;
  bool keep_upper = true;
};

struct SectionFrame2 {
  Vec2 origin;   // foot point t*u of the cut line
  Vec2 tangent;  // perp(u), unit
  Vec2 normal;   // u
};

// chord [lo, hi] in tangent coordinates relative to frame.origin
struct Section2 {
  SectionFrame2 frame;
  double lo = 0.0;
  double hi = 0.0;
};

struct SegmentMoments {
  double measure = 0.0;   // length
  double centroid = 0.0;  // in tangent coordinates
  double s2 = 0.0;        // integral of s^2 along the chord
};

ConvexPolygon build_polygon(const std::vector<Vec2>& pts);

inline bool is_empty(const ConvexPolygon& P) { return P.v.empty(); }

// bounding-box diagonal; the scale reference for all relative tolerances
double diameter(const ConvexPolygon& P);

ConvexPolygon clip(const ConvexPolygon& P, const Halfspace2& h);
Moments2 moments(const ConvexPolygon& P);
Section2 section(const ConvexPolygon& P, Vec2 u, double t);
SegmentMoments section_moments(const Section2& s);

double support_value(const ConvexPolygon& P, Vec2 u);
double boundary_distance(const ConvexPolygon& P, Vec2 p);
bool contains(const ConvexPolygon& P, Vec2 p, double slack);

// Caches vertex heights <v_i, u> so repeated cap/section queries along one
// direction (e.g. the volume-fraction solve) cost a single O(n) walk each.
class PolygonDirScan {
 public:
  PolygonDirScan(const ConvexPolygon& body, Vec2 u);

  double lo() const { return lo_; }    // min vertex height
  double hi() const { return hi_; }    // max vertex height
  double body_area() const { return area_; }
  double eps() const { return eps_; }
  Vec2 direction() const { return u_; }

  struct CapEval {
    double vol = 0.0;    // area of {<x,u> >= t}
    double slice = 0.0;  // length of the cut chord at level t
  };
  CapEval cap(double t) const;
  double body_volume() const { return area_; }
  Moments2 cap_moments(double t) const;
  Section2 section(double t) const;

 private:
  const ConvexPolygon* body_;
  Vec2 u_;
  Vec2 shift_;  // bbox center, moments are accumulated relative to it
  std::vector<double> d_;
  double lo_ = 0.0, hi_ = 0.0, area_ = 0.0, eps_ = 0.0;
};

}  // namespace floatlab
