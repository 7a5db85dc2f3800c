#include "floatlab/radon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "floatlab/errors.hpp"

namespace floatlab {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

void check_quadrature(int q) {
  if (q < 64) fail(errc::too_few_samples, "need at least 64 quadrature points");
}

void check_centered(const ConvexPolytope& K) {
  if (norm(moments(K).centroid) > 1e-6 * diameter(K)) {
    fail(errc::asymmetric_body, "centroid must sit at the origin");
  }
}

// planar radial function of a convex polygon that strictly surrounds the
// origin, queried at sorted angles in one sweep
class RadialProfile {
 public:
  explicit RadialProfile(const ConvexPolygon& poly) {
    const std::size_t n = poly.v.size();
    if (n < 3) fail(errc::empty_section, "section polygon is degenerate");
    std::size_t start = 0;
    double amin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& a = poly.v[i];
      const Vec2& b = poly.v[(i + 1) % n];
      if (cross(a, b) <= 0.0) {
        fail(errc::degenerate_input, "section does not surround the origin");
      }
      const double ang = std::atan2(a.y, a.x);
      if (ang < amin) {
        amin = ang;
        start = i;
      }
    }
    ang_.reserve(n + 1);
    pts_.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      const Vec2& p = poly.v[(start + j) % n];
      double a = std::atan2(p.y, p.x);
      if (j > 0) {
        while (a < ang_.back() - 1e-15) a += kTau;
      }
      ang_.push_back(j == n ? ang_[0] + kTau : a);
      pts_.push_back(p);
    }
  }

  double eval(double theta) const {
    double th = std::fmod(theta - ang_[0], kTau);
    if (th < 0.0) th += kTau;
    th += ang_[0];
    const auto it = std::upper_bound(ang_.begin(), ang_.end(), th);
    std::size_t hi = static_cast<std::size_t>(it - ang_.begin());
    hi = std::clamp<std::size_t>(hi, 1, ang_.size() - 1);
    const Vec2& a = pts_[hi - 1];
    const Vec2& b = pts_[hi];
    const Vec2 d{std::cos(th), std::sin(th)};
    const double den = cross(d, b - a);
    if (std::abs(den) <= 0.0) return norm(a);
    const double r = cross(a, b) / den;
    return r > 0.0 ? r : norm(a);
  }

 private:
  std::vector<double> ang_;
  std::vector<Vec2> pts_;
};

// raw in-plane quadratic form of a section polygon in direction w
double raw_form(const Moments2& m, Vec2 w) {
  if (m.measure <= 0.0) fail(errc::empty_section, "section has no area");
  return w.x * w.x * m.sxx + 2.0 * w.x * w.y * m.sxy + w.y * w.y * m.syy;
}

}  // namespace

double spherical_radon(const SphericalFunction& f, Vec3 u, int quadrature) {
  check_quadrature(quadrature);
  u = normalized(u);
  Vec3 e1, e2;
  tangent_basis(u, e1, e2);
  double sum = 0.0;
  for (int j = 0; j < quadrature; ++j) {
    const double a = kTau * static_cast<double>(j) / static_cast<double>(quadrature);
    sum += f(e1 * std::cos(a) + e2 * std::sin(a));
  }
  return sum * (kTau / static_cast<double>(quadrature));
}

double radial_radon_pow4(const ConvexPolytope& K, Vec3 u, int quadrature) {
  check_quadrature(quadrature);
  const Section3 sec = section(K, normalized(u), 0.0);
  const RadialProfile profile(sec.poly);
  double sum = 0.0;
  for (int j = 0; j < quadrature; ++j) {
    const double a = kTau * static_cast<double>(j) / static_cast<double>(quadrature);
    const double r = profile.eval(a);
    sum += (r * r) * (r * r);
  }
  return sum * (kTau / static_cast<double>(quadrature));
}

double central_section_moment(const ConvexPolytope& K, Vec3 u, Vec3 v) {
  check_centered(K);
  u = normalized(u);
  v = normalized(v);
  if (std::abs(dot(u, v)) > 1e-10) {
    fail(errc::degenerate_input, "v must be orthogonal to u");
  }
  const Section3 sec = section(K, u, 0.0);
  const Moments2 m = section_moments(sec);
  return raw_form(m, {dot(v, sec.frame.e1), dot(v, sec.frame.e2)});
}

Theorem2Report theorem2_report(const ConvexPolytope& K, const std::vector<Vec3>& directions,
                               int tangents, double threshold, int quadrature, Exec exec) {
  if (directions.empty()) fail(errc::too_few_samples, "direction set is empty");
  if (tangents < 2) fail(errc::too_few_samples, "need at least two tangents");
  check_quadrature(quadrature);
  check_centered(K);
  Theorem2Report rep;
  rep.threshold = threshold;
  const std::size_t k = static_cast<std::size_t>(tangents);
  rep.rows.resize(directions.size() * k);
  for_each_index(directions.size(), exec, [&](std::size_t i) {
    const Vec3 u = normalized(directions[i]);
    const Section3 sec = section(K, u, 0.0);
    const Moments2 m = section_moments(sec);
    const RadialProfile profile(sec.poly);
    double radon = 0.0;
    for (int j = 0; j < quadrature; ++j) {
      const double a = kTau * static_cast<double>(j) / static_cast<double>(quadrature);
      const double r = profile.eval(a);
      radon += (r * r) * (r * r);
    }
    radon *= kTau / static_cast<double>(quadrature);
    Vec3 e1, e2;
    tangent_basis(u, e1, e2);
    double c_sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const double a = kTau * static_cast<double>(j) / static_cast<double>(k);
      const Vec3 v = e1 * std::cos(a) + e2 * std::sin(a);
      SectionMomentRow& row = rep.rows[i * k + j];
      row.u = u;
      row.v = v;
      row.value = raw_form(m, {dot(v, sec.frame.e1), dot(v, sec.frame.e2)});
      row.radon_r4 = radon;
      c_sum += row.value;
    }
    const double c_mean = c_sum / static_cast<double>(k);
    const double gap = std::abs(c_mean - (kTangentSquareMean / 4.0) * radon) / c_mean;
    for (std::size_t j = 0; j < k; ++j) {
      rep.rows[i * k + j].c_mean = c_mean;
      rep.rows[i * k + j].identity_gap = gap;
    }
  });
  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  double sum = 0.0;
  double gap = 0.0;
  for (const auto& row : rep.rows) {
    vmin = std::min(vmin, row.value);
    vmax = std::max(vmax, row.value);
    sum += row.value;
    gap = std::max(gap, row.identity_gap);
  }
  rep.min = vmin;
  rep.max = vmax;
  rep.mean = sum / static_cast<double>(rep.rows.size());
  rep.spread = (vmax - vmin) / rep.mean;
  rep.max_identity_gap = gap;
  rep.is_ball = rep.spread < threshold;
  return rep;
}

}  // namespace floatlab
