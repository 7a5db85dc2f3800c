#include "floatlab/metronoid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "floatlab/errors.hpp"

namespace floatlab {

namespace {

void check_tangent(double uv) {
  if (std::abs(uv) > 1e-10) {
    fail(errc::degenerate_input, "v must be orthogonal to u");
  }
}

// centered in-plane quadratic form of a section polygon in direction w
double centered_form(const Moments2& m, Vec2 w) {
  if (m.measure <= 0.0) fail(errc::empty_section, "section has no area");
  const double cxx = m.sxx - m.centroid.x * m.centroid.x * m.measure;
  const double cxy = m.sxy - m.centroid.x * m.centroid.y * m.measure;
  const double cyy = m.syy - m.centroid.y * m.centroid.y * m.measure;
  return w.x * w.x * cxx + 2.0 * w.x * w.y * cxy + w.y * w.y * cyy;
}

struct Stats {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  long n = 0;
  void add(double x) {
    min = std::min(min, x);
    max = std::max(max, x);
    sum += x;
    ++n;
  }
};

UlamStats finish_stats(const Stats& st, double delta, double volume, double threshold) {
  UlamStats out;
  out.min = st.min;
  out.max = st.max;
  out.mean = st.sum / static_cast<double>(st.n);
  out.spread = (st.max - st.min) / out.mean;
  out.r_estimate = out.mean / (delta * volume);
  out.threshold = threshold;
  out.consistent = out.spread < threshold;
  return out;
}

}  // namespace

double isotropy_moment(const ConvexPolygon& K, double delta, Vec2 u, Vec2 v,
                       double tol) {
  u = normalized(u);
  v = normalized(v);
  check_tangent(dot(u, v));
  const PolygonDirScan ds(K, u);
  const double t = cut_offset_scan(ds, delta, tol);
  const Section2 sec = ds.section(t);
  const SegmentMoments sm = section_moments(sec);
  if (sm.measure <= 0.0) fail(errc::empty_section, "section has no length");
  // <x,v> = <origin,v> + s <tangent,v>, with <tangent,v> = ±1
  return sm.s2 - sm.centroid * sm.centroid * sm.measure;
}

double isotropy_moment(const ConvexPolytope& K, double delta, Vec3 u, Vec3 v,
                       double tol) {
  u = normalized(u);
  v = normalized(v);
  check_tangent(dot(u, v));
  const PolytopeScan scan(K);
  const PolytopeDirScan ds(scan, u);
  const double t = cut_offset_scan(ds, delta, tol);
  const Section3 sec = ds.section(t);
  const Moments2 m = section_moments(sec);
  const Vec2 w{dot(v, sec.frame.e1), dot(v, sec.frame.e2)};
  return centered_form(m, w);
}

std::vector<MetronoidSample2> metronoid_boundary(const ConvexPolygon& K, double delta,
                                                 const std::vector<Vec2>& directions,
                                                 double tol, Exec exec) {
  std::vector<MetronoidSample2> out(directions.size());
  for_each_index(directions.size(), exec, [&](std::size_t i) {
    const Vec2 u = normalized(directions[i]);
    const PolygonDirScan ds(K, u);
    const double t = cut_offset_scan(ds, delta, tol);
    out[i] = {u, ds.cap_moments(t).centroid};
  });
  return out;
}

std::vector<MetronoidSample3> metronoid_boundary(const ConvexPolytope& K, double delta,
                                                 const std::vector<Vec3>& directions,
                                                 double tol, Exec exec) {
  const PolytopeScan scan(K);
  std::vector<MetronoidSample3> out(directions.size());
  for_each_index(directions.size(), exec, [&](std::size_t i) {
    const Vec3 u = normalized(directions[i]);
    const PolytopeDirScan ds(scan, u);
    const double t = cut_offset_scan(ds, delta, tol);
    out[i] = {u, ds.cap_moments(t).centroid};
  });
  return out;
}

double gauss_map_residual(const std::vector<MetronoidSample2>& samples) {
  const std::size_t n = samples.size();
  if (n < 16) fail(errc::too_few_samples, "need at least 16 boundary samples");
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& prev = samples[(i + n - 1) % n].point;
    const Vec2& next = samples[(i + 1) % n].point;
    const Vec2 tang = next - prev;
    const double len = norm(tang);
    if (len <= 0.0) continue;
    worst = std::max(worst, std::abs(dot(tang, samples[i].u)) / len);
  }
  return worst;
}

double curvature_radius_2d(const ConvexPolygon& K, double delta, double phi,
                           double tol) {
  const Vec2 u{std::cos(phi), std::sin(phi)};
  const double m = isotropy_moment(K, delta, u, perp(u), tol);
  return m / (delta * moments(K).measure);
}

UlamReport2 ulam_report(const ConvexPolygon& K, double delta,
                        const std::vector<Vec2>& directions, int /*tangents*/,
                        double threshold, double tol, Exec exec) {
  if (directions.empty()) fail(errc::too_few_samples, "direction set is empty");
  UlamReport2 rep;
  rep.delta = delta;
  rep.samples.resize(directions.size());
  for_each_index(directions.size(), exec, [&](std::size_t i) {
    const Vec2 u = normalized(directions[i]);
    const Vec2 v = perp(u);
    rep.samples[i] = {u, v, isotropy_moment(K, delta, u, v, tol)};
  });
  Stats st;
  for (const auto& s : rep.samples) st.add(s.value);
  rep.stats = finish_stats(st, delta, moments(K).measure, threshold);
  return rep;
}

UlamReport3 ulam_report(const ConvexPolytope& K, double delta,
                        const std::vector<Vec3>& directions, int tangents,
                        double threshold, double tol, Exec exec) {
  if (directions.empty()) fail(errc::too_few_samples, "direction set is empty");
  if (tangents < 1) fail(errc::too_few_samples, "need at least one tangent");
  const PolytopeScan scan(K);
  const std::size_t k = static_cast<std::size_t>(tangents);
  UlamReport3 rep;
  rep.delta = delta;
  rep.samples.resize(directions.size() * k);
  for_each_index(directions.size(), exec, [&](std::size_t i) {
    const Vec3 u = normalized(directions[i]);
    const PolytopeDirScan ds(scan, u);
    const double t = cut_offset_scan(ds, delta, tol);
    const Section3 sec = ds.section(t);
    const Moments2 m = section_moments(sec);
    Vec3 e1, e2;
    tangent_basis(u, e1, e2);
    for (std::size_t j = 0; j < k; ++j) {
      const double a = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k);
      const Vec3 v = e1 * std::cos(a) + e2 * std::sin(a);
      const Vec2 w{dot(v, sec.frame.e1), dot(v, sec.frame.e2)};
      rep.samples[i * k + j] = {u, v, centered_form(m, w)};
    }
  });
  Stats st;
  for (const auto& s : rep.samples) st.add(s.value);
  rep.stats = finish_stats(st, delta, scan.volume(), threshold);
  return rep;
}

}  // namespace floatlab
