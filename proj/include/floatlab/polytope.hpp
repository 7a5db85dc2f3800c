#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "floatlab/polygon.hpp"
#include "floatlab/vec.hpp"

namespace floatlab {

// Triangle face, counterclockwise seen from outside.
struct Face {
  int a = 0, b = 0, c = 0;
};

// Closed oriented triangulated boundary: every directed edge appears exactly
// once. An empty vertex list is the empty body.
struct ConvexPolytope {
  std::vector<Vec3> v;
  std::vector<Face> f;
};

struct Moments3 {
  double measure = 0.0;  // volume
  Vec3 centroid{};
  // integrals of x*x, y*y, z*z, x*y, x*z, y*z
  double sxx = 0, syy = 0, szz = 0, sxy = 0, sxz = 0, syz = 0;
};

struct Halfspace3 {
  Vec3 normal;
  double offset = 0.0;
  bool keep_upper = true;
};

struct SectionFrame3 {
  Vec3 origin;  // foot point t*u
  Vec3 e1, e2;  // in-plane orthonormal basis, (e1, e2, normal) right-handed
  Vec3 normal;
};

// planar cut polygon in (e1, e2) frame coordinates
struct Section3 {
  SectionFrame3 frame;
  ConvexPolygon poly;
};

ConvexPolytope build_polytope(const std::vector<Vec3>& pts);

inline bool is_empty(const ConvexPolytope& P) { return P.v.empty(); }

double diameter(const ConvexPolytope& P);  // bbox diagonal

ConvexPolytope clip(const ConvexPolytope& P, const Halfspace3& h);
Moments3 moments(const ConvexPolytope& P);
Section3 section(const ConvexPolytope& P, Vec3 u, double t);
Moments2 section_moments(const Section3& s);  // in-frame plane moments

double support_value(const ConvexPolytope& P, Vec3 u);
bool contains(const ConvexPolytope& P, Vec3 p, double slack);
// largest signed distance of p to a face plane; <= 0 means inside
double max_face_excess(const ConvexPolytope& P, Vec3 p);
// distance from the origin to the boundary along direction xi (origin must be
// strictly inside)
double radial_function(const ConvexPolytope& P, Vec3 xi);

// structural check used by tests: closed oriented surface, Euler count,
// outward faces, positive volume
bool validate(const ConvexPolytope& P, std::string* why = nullptr);

// Body-level cache shared by all direction scans: shifted vertices, per-face
// signed-tetrahedron contributions (independent of the cut), unique edges.
class PolytopeScan {
 public:
  explicit PolytopeScan(const ConvexPolytope& body);
  const ConvexPolytope& body() const { return *body_; }
  double volume() const { return vol_; }
  double diam() const { return diam_; }
  double eps() const { return eps_; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }

 private:
  friend class PolytopeDirScan;
  struct FaceMom {
    double vol;            // det/6
    Vec3 m1;               // det*(a+b+c)/24
    double xx, yy, zz, xy, xz, yz;
  };
  const ConvexPolytope* body_;
  std::vector<Vec3> q_;  // vertices shifted to the bbox center
  std::vector<FaceMom> fm_;
  std::vector<std::array<int, 2>> edges_;
  Vec3 shift_{};
  double vol_ = 0.0, diam_ = 0.0, eps_ = 0.0;
};

// Vertex heights along one direction; cap volumes/moments at many offsets
// reuse them, and faces entirely inside the cap reuse the precomputed
// per-face contributions.
class PolytopeDirScan {
 public:
  PolytopeDirScan(const PolytopeScan& s, Vec3 u);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double body_volume() const { return s_->volume(); }
  double eps() const { return s_->eps(); }
  Vec3 direction() const { return u_; }

  struct CapEval {
    double vol = 0.0;    // volume of {<x,u> >= t}
    double slice = 0.0;  // area of the cut polygon at level t
  };
  CapEval cap(double t) const;
  Moments3 cap_moments(double t) const;
  Section3 section(double t) const;

 private:
  const PolytopeScan* s_;
  Vec3 u_;
  std::vector<double> d_;  // ambient vertex heights <v_i, u>
  double lo_ = 0.0, hi_ = 0.0;
};

}  // namespace floatlab
