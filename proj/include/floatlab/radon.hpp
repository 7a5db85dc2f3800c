#pragma once

#include <functional>
#include <vector>

#include "floatlab/parallel.hpp"
#include "floatlab/polytope.hpp"

namespace floatlab {

using SphericalFunction = std::function<double(Vec3)>;

// mean of <xi,v>^2 over the unit circle of tangent directions xi ⊥ u
inline constexpr double kTangentSquareMean = 0.5;

// Great-circle integral of f over u⊥ ∩ S² (periodic trapezoid rule; total
// weight 2*pi).
double spherical_radon(const SphericalFunction& f, Vec3 u, int quadrature = 512);

// R(r_K^4)(u) evaluated through the central section: the radial function of
// K restricted to the great circle u⊥ ∩ S² equals the planar radial function
// of the section polygon K ∩ u⊥.
double radial_radon_pow4(const ConvexPolytope& K, Vec3 u, int quadrature = 512);

// C(u,v) = ∫ <x,v>^2 over the central section K ∩ u⊥ (v ⊥ u); requires the
// centroid of K at the origin within 1e-6 * diam.
double central_section_moment(const ConvexPolytope& K, Vec3 u, Vec3 v);

struct SectionMomentRow {
  Vec3 u{};
  Vec3 v{};
  double value = 0.0;        // C(u,v)
  double c_mean = 0.0;       // mean of C(u, ·) over the tangent grid at u
  double radon_r4 = 0.0;     // R(r_K^4)(u)
  double identity_gap = 0.0; // |c_mean - radon_r4/8| / c_mean
};

struct Theorem2Report {
  double threshold = 5e-2;
  double min = 0.0, max = 0.0, mean = 0.0;
  double spread = 0.0;           // over all C(u,v) samples
  double max_identity_gap = 0.0;
  bool is_ball = false;          // spread < threshold
  std::vector<SectionMomentRow> rows;  // one row per (u, v) pair
};

Theorem2Report theorem2_report(const ConvexPolytope& K, const std::vector<Vec3>& directions,
                               int tangents = 16, double threshold = 5e-2,
                               int quadrature = 512, Exec exec = Exec::Parallel);

}  // namespace floatlab
