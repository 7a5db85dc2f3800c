#include "floatlab/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "floatlab/errors.hpp"

namespace floatlab {

namespace {

struct Box2 {
  Vec2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
};

Box2 bbox(const std::vector<Vec2>& v) {
  Box2 b;
  for (const Vec2& p : v) {
    b.lo.x = std::min(b.lo.x, p.x);
    b.lo.y = std::min(b.lo.y, p.y);
    b.hi.x = std::max(b.hi.x, p.x);
    b.hi.y = std::max(b.hi.y, p.y);
  }
  return b;
}

// Green's theorem accumulator over directed boundary edges; the /2 /6 /12 /24
// divisions and the shift back to ambient coordinates happen in finish().
struct GreenAcc {
  double a2 = 0, sx6 = 0, sy6 = 0, xx12 = 0, yy12 = 0, xy24 = 0;

  void edge(Vec2 p, Vec2 q) {
    const double cr = cross(p, q);
    a2 += cr;
    sx6 += cr * (p.x + q.x);
    sy6 += cr * (p.y + q.y);
    xx12 += cr * (p.x * p.x + p.x * q.x + q.x * q.x);
    yy12 += cr * (p.y * p.y + p.y * q.y + q.y * q.y);
    xy24 += cr * (2.0 * p.x * p.y + p.x * q.y + q.x * p.y + 2.0 * q.x * q.y);
  }

  Moments2 finish(Vec2 shift) const {
    Moments2 m;
    const double area = a2 / 2.0;
    if (!(area > 0.0)) {
      m.centroid = shift;
      return m;
    }
    m.measure = area;
    const double sx = sx6 / 6.0, sy = sy6 / 6.0;
    m.centroid = Vec2{sx / area + shift.x, sy / area + shift.y};
    m.sxx = xx12 / 12.0 + 2.0 * shift.x * sx + shift.x * shift.x * area;
    m.syy = yy12 / 12.0 + 2.0 * shift.y * sy + shift.y * shift.y * area;
    m.sxy = xy24 / 24.0 + shift.x * sy + shift.y * sx + shift.x * shift.y * area;
    return m;
  }
};

double signed_area2(const std::vector<Vec2>& v) {
  double a2 = 0.0;
  for (std::size_t i = 0, m = v.size(); i < m; ++i) {
    a2 += cross(v[i], v[(i + 1) % m]);
  }
  return a2;
}

int classify(double d, double t, double eps) {
  if (d > t + eps) return 1;
  if (d < t - eps) return -1;
  return 0;
}

}  // namespace

ConvexPolygon build_polygon(const std::vector<Vec2>& pts) {
  if (pts.size() < 3) fail(errc::degenerate_input, "polygon needs at least 3 points");
  std::vector<Vec2> s = pts;
  std::sort(s.begin(), s.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  s.erase(std::unique(s.begin(), s.end(),
                      [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
          s.end());
  if (s.size() < 3) fail(errc::degenerate_input, "fewer than 3 distinct points");

  // Andrew's monotone chain; points within the relative tolerance of a chain
  // edge count as collinear and are dropped so vertices are strictly convex
  const Box2 bb = bbox(s);
  const double tol = 1e-9 * norm(bb.hi - bb.lo);
  auto chain = [tol](const std::vector<Vec2>& in, std::vector<Vec2>& out) {
    for (Vec2 p : in) {
      while (out.size() >= 2) {
        const Vec2 a = out[out.size() - 2];
        if (cross(out.back() - a, p - a) > tol * norm(p - a)) break;
        out.pop_back();
      }
      out.push_back(p);
    }
  };
  std::vector<Vec2> lower, upper;
  chain(s, lower);
  std::vector<Vec2> rev(s.rbegin(), s.rend());
  chain(rev, upper);
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() < 3 || signed_area2(lower) <= 0.0) {
    fail(errc::degenerate_input, "points are collinear");
  }
  return ConvexPolygon{std::move(lower)};
}

double diameter(const ConvexPolygon& P) {
  if (P.v.empty()) return 0.0;
  const Box2 b = bbox(P.v);
  return norm(b.hi - b.lo);
}

ConvexPolygon clip(const ConvexPolygon& P, const Halfspace2& h) {
  if (P.v.size() < 3) return {};
  const double nn = norm(h.normal);
  if (!(nn > 0.0)) fail(errc::degenerate_input, "halfspace normal is zero");
  const Vec2 n = h.normal / nn;
  const double off = h.offset / nn;
  const double sgn = h.keep_upper ? 1.0 : -1.0;
  const double diam = diameter(P);
  const double eps = 1e-9 * diam;

  const std::size_t m = P.v.size();
  std::vector<double> s(m);
  for (std::size_t i = 0; i < m; ++i) s[i] = sgn * (dot(P.v[i], n) - off);

  std::vector<Vec2> out;
  out.reserve(m + 2);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const int ci = classify(s[i], 0.0, eps);
    const int cj = classify(s[j], 0.0, eps);
    if (ci >= 0) out.push_back(P.v[i]);
    if ((ci > 0 && cj < 0) || (ci < 0 && cj > 0)) {
      const double w = s[i] / (s[i] - s[j]);
      out.push_back(P.v[i] + (P.v[j] - P.v[i]) * w);
    }
  }

  // drop consecutive near-duplicates (crossing landing on a kept vertex)
  const double dup = 1e-12 * diam;
  std::vector<Vec2> clean;
  clean.reserve(out.size());
  for (const Vec2& p : out) {
    if (clean.empty() || norm(p - clean.back()) > dup) clean.push_back(p);
  }
  while (clean.size() > 1 && norm(clean.front() - clean.back()) <= dup) clean.pop_back();

  if (clean.size() < 3 || signed_area2(clean) <= 0.0) return {};
  return ConvexPolygon{std::move(clean)};
}

Moments2 moments(const ConvexPolygon& P) {
  if (P.v.empty()) fail(errc::empty_body, "moments of an empty body");
  if (P.v.size() == 1) {
    Moments2 m;
    m.centroid = P.v[0];
    return m;
  }
  if (P.v.size() == 2) {
    Moments2 m;
    m.centroid = (P.v[0] + P.v[1]) / 2.0;
    return m;
  }
  const Box2 b = bbox(P.v);
  const Vec2 shift = (b.lo + b.hi) / 2.0;
  GreenAcc acc;
  for (std::size_t i = 0, m = P.v.size(); i < m; ++i) {
    acc.edge(P.v[i] - shift, P.v[(i + 1) % m] - shift);
  }
  return acc.finish(shift);
}

Section2 section(const ConvexPolygon& P, Vec2 u, double t) {
  if (P.v.size() < 3) fail(errc::empty_body, "section of an empty body");
  const Vec2 un = normalized(u);
  const double eps = 1e-9 * diameter(P);
  const Vec2 tangent = perp(un);
  const std::size_t m = P.v.size();

  double smin = std::numeric_limits<double>::infinity();
  double smax = -std::numeric_limits<double>::infinity();
  bool hit = false;
  auto record = [&](double sc) {
    smin = std::min(smin, sc);
    smax = std::max(smax, sc);
    hit = true;
  };

  std::vector<double> d(m);
  for (std::size_t i = 0; i < m; ++i) d[i] = dot(P.v[i], un);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const int ci = classify(d[i], t, eps);
    const int cj = classify(d[j], t, eps);
    if (ci == 0) record(dot(P.v[i], tangent));
    if ((ci > 0 && cj < 0) || (ci < 0 && cj > 0)) {
      const double w = (t - d[i]) / (d[j] - d[i]);
      record(dot(P.v[i] + (P.v[j] - P.v[i]) * w, tangent));
    }
  }
  if (!hit) fail(errc::empty_section, "cut line misses the body");
  Section2 s;
  s.frame = SectionFrame2{un * t, tangent, un};
  s.lo = smin;
  s.hi = smax;
  return s;
}

SegmentMoments section_moments(const Section2& s) {
  SegmentMoments m;
  m.measure = s.hi - s.lo;
  m.centroid = (s.lo + s.hi) / 2.0;
  m.s2 = (s.hi * s.hi * s.hi - s.lo * s.lo * s.lo) / 3.0;
  return m;
}

double support_value(const ConvexPolygon& P, Vec2 u) {
  if (P.v.empty()) fail(errc::empty_body, "support of an empty body");
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& p : P.v) best = std::max(best, dot(p, u));
  return best;
}

double boundary_distance(const ConvexPolygon& P, Vec2 p) {
  if (P.v.empty()) fail(errc::empty_body, "distance to an empty body");
  if (P.v.size() == 1) return norm(p - P.v[0]);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, m = P.v.size(); i < m; ++i) {
    const Vec2 a = P.v[i];
    const Vec2 b = P.v[(i + 1) % m];
    const Vec2 e = b - a;
    const double len2 = norm2(e);
    double w = len2 > 0.0 ? dot(p - a, e) / len2 : 0.0;
    w = std::clamp(w, 0.0, 1.0);
    best = std::min(best, norm(p - (a + e * w)));
  }
  return best;
}

bool contains(const ConvexPolygon& P, Vec2 p, double slack) {
  if (P.v.size() < 3) return false;
  for (std::size_t i = 0, m = P.v.size(); i < m; ++i) {
    const Vec2 a = P.v[i];
    const Vec2 b = P.v[(i + 1) % m];
    const Vec2 e = b - a;
    const double len = norm(e);
    if (len == 0.0) continue;
    if (cross(e, p - a) / len < -slack) return false;
  }
  return true;
}

PolygonDirScan::PolygonDirScan(const ConvexPolygon& body, Vec2 u) : body_(&body) {
  if (body.v.size() < 3) fail(errc::empty_body, "direction scan of an empty body");
  u_ = normalized(u);
  const Box2 b = bbox(body.v);
  shift_ = (b.lo + b.hi) / 2.0;
  const double diam = norm(b.hi - b.lo);
  eps_ = 1e-9 * diam;

  const std::size_t m = body.v.size();
  d_.resize(m);
  lo_ = std::numeric_limits<double>::infinity();
  hi_ = -std::numeric_limits<double>::infinity();
  double a2 = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    d_[i] = dot(body.v[i], u_);
    lo_ = std::min(lo_, d_[i]);
    hi_ = std::max(hi_, d_[i]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    a2 += cross(body.v[i] - shift_, body.v[(i + 1) % m] - shift_);
  }
  area_ = a2 / 2.0;
  if (!(area_ > 0.0)) fail(errc::degenerate_input, "body has no area");
}

PolygonDirScan::CapEval PolygonDirScan::cap(double t) const {
  const std::vector<Vec2>& v = body_->v;
  const std::size_t m = v.size();
  const Vec2 tangent = perp(u_);

  double a2 = 0.0;
  Vec2 first{}, prev{};
  bool any = false;
  auto emit = [&](Vec2 p) {
    p = p - shift_;
    if (!any) {
      first = prev = p;
      any = true;
    } else {
      a2 += cross(prev, p);
      prev = p;
    }
  };
  double smin = std::numeric_limits<double>::infinity();
  double smax = -std::numeric_limits<double>::infinity();
  bool hit = false;
  auto record = [&](double sc) {
    smin = std::min(smin, sc);
    smax = std::max(smax, sc);
    hit = true;
  };

  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const int ci = classify(d_[i], t, eps_);
    const int cj = classify(d_[j], t, eps_);
    if (ci >= 0) emit(v[i]);
    if (ci == 0) record(dot(v[i], tangent));
    if ((ci > 0 && cj < 0) || (ci < 0 && cj > 0)) {
      const double w = (t - d_[i]) / (d_[j] - d_[i]);
      const Vec2 x = v[i] + (v[j] - v[i]) * w;
      emit(x);
      record(dot(x, tangent));
    }
  }
  if (any) a2 += cross(prev, first);

  CapEval e;
  e.vol = std::max(0.0, a2 / 2.0);
  e.slice = hit ? std::max(0.0, smax - smin) : 0.0;
  return e;
}

Moments2 PolygonDirScan::cap_moments(double t) const {
  const std::vector<Vec2>& v = body_->v;
  const std::size_t m = v.size();

  GreenAcc acc;
  Vec2 first{}, prev{};
  bool any = false;
  auto emit = [&](Vec2 p) {
    p = p - shift_;
    if (!any) {
      first = prev = p;
      any = true;
    } else {
      acc.edge(prev, p);
      prev = p;
    }
  };
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const int ci = classify(d_[i], t, eps_);
    const int cj = classify(d_[j], t, eps_);
    if (ci >= 0) emit(v[i]);
    if ((ci > 0 && cj < 0) || (ci < 0 && cj > 0)) {
      const double w = (t - d_[i]) / (d_[j] - d_[i]);
      emit(v[i] + (v[j] - v[i]) * w);
    }
  }
  if (any) acc.edge(prev, first);
  return acc.finish(shift_);
}

Section2 PolygonDirScan::section(double t) const {
  if (t > hi_ + eps_ || t < lo_ - eps_) {
    fail(errc::empty_section, "cut line misses the body");
  }
  const std::vector<Vec2>& v = body_->v;
  const std::size_t m = v.size();
  const Vec2 tangent = perp(u_);
  double smin = std::numeric_limits<double>::infinity();
  double smax = -std::numeric_limits<double>::infinity();
  bool hit = false;
  auto record = [&](double sc) {
    smin = std::min(smin, sc);
    smax = std::max(smax, sc);
    hit = true;
  };
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const int ci = classify(d_[i], t, eps_);
    const int cj = classify(d_[j], t, eps_);
    if (ci == 0) record(dot(v[i], tangent));
    if ((ci > 0 && cj < 0) || (ci < 0 && cj > 0)) {
      const double w = (t - d_[i]) / (d_[j] - d_[i]);
      record(dot(v[i] + (v[j] - v[i]) * w, tangent));
    }
  }
  if (!hit) fail(errc::empty_section, "cut line misses the body");
  Section2 s;
  s.frame = SectionFrame2{u_ * t, tangent, u_};
  s.lo = smin;
  s.hi = smax;
  return s;
}

}  // namespace floatlab
