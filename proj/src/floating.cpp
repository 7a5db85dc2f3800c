#include "floatlab/floating.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "floatlab/bodies.hpp"
#include "floatlab/errors.hpp"

namespace floatlab {

namespace {

constexpr double kInfDouble = std::numeric_limits<double>::infinity();

void check_delta(double delta) {
  if (!(delta > 0.0) || !(delta <= 0.5)) {
    fail(errc::invalid_delta, "delta must lie in (0, 1/2]");
  }
}

// Newton iteration on the cap volume, safeguarded by a sign-preserving
// bracket; vol(t) is continuous and strictly decreasing on [lo, hi].
template <class DirScan>
double solve_cut(const DirScan& ds, double delta, double tol) {
  check_delta(delta);
  const double target = delta * ds.body_volume();
  double a = ds.lo();  // vol(a) = V >= target
  double b = ds.hi();  // vol(b) = 0 < target
  double t = 0.5 * (a + b);
  const double tiny = std::numeric_limits<double>::min();
  for (int iter = 0; iter < 200; ++iter) {
    const auto ce = ds.cap(t);
    const double f = ce.vol - target;
    if (std::abs(f) <= tol * target) return t;
    if (f > 0.0) a = t; else b = t;
    if (b - a <= 8.0 * std::numeric_limits<double>::epsilon() *
                     (std::abs(a) + std::abs(b) + ds.eps())) {
      return 0.5 * (a + b);
    }
    double next;
    if (ce.slice > tiny && iter % 8 != 7) {
      next = t + f / ce.slice;  // d vol / d t = -slice
      if (!(next > a && next < b)) next = 0.5 * (a + b);
    } else {
      next = 0.5 * (a + b);
    }
    t = next;
  }
  return t;
}

Vec2 to_ambient(const Section2& s, double tangential) {
  return s.frame.origin + s.frame.tangent * tangential;
}

Vec3 to_ambient(const Section3& s, Vec2 q) {
  return s.frame.origin + s.frame.e1 * q.x + s.frame.e2 * q.y;
}

// distance from p to the segment [a, b]
double point_segment(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 e = b - a;
  const double den = norm2(e);
  if (den <= 0.0) return norm(p - a);
  double w = dot(p - a, e) / den;
  w = std::clamp(w, 0.0, 1.0);
  return norm(p - (a + e * w));
}

// distance from g to the convex hull of pts (all roughly coplanar already)
double planar_hull_distance(const std::vector<Vec2>& pts, Vec2 g) {
  if (pts.empty()) return 0.0;
  if (pts.size() == 1) return norm(g - pts[0]);
  if (pts.size() == 2) return point_segment(g, pts[0], pts[1]);
  try {
    const ConvexPolygon hull = build_polygon(pts);
    if (contains(hull, g, 0.0)) return 0.0;
    return boundary_distance(hull, g);
  } catch (const Error&) {
    auto lex = [](Vec2 p, Vec2 q) {
      return p.x < q.x || (p.x == q.x && p.y < q.y);
    };
    const Vec2 lo = *std::min_element(pts.begin(), pts.end(), lex);
    const Vec2 hi = *std::max_element(pts.begin(), pts.end(), lex);
    return point_segment(g, lo, hi);
  }
}

ConvexPolygon box_polygon(const ConvexPolygon& K) {
  double lx = K.v[0].x, hx = lx, ly = K.v[0].y, hy = ly;
  for (const Vec2& p : K.v) {
    lx = std::min(lx, p.x); hx = std::max(hx, p.x);
    ly = std::min(ly, p.y); hy = std::max(hy, p.y);
  }
  ConvexPolygon B;
  B.v = {{lx, ly}, {hx, ly}, {hx, hy}, {lx, hy}};
  return B;
}

ConvexPolytope box_polytope(const ConvexPolytope& K) {
  Vec3 lo = K.v[0], hi = K.v[0];
  for (const Vec3& p : K.v) {
    lo.x = std::min(lo.x, p.x); hi.x = std::max(hi.x, p.x);
    lo.y = std::min(lo.y, p.y); hi.y = std::max(hi.y, p.y);
    lo.z = std::min(lo.z, p.z); hi.z = std::max(hi.z, p.z);
  }
  return make_box(lo, hi);
}

ConvexPolygon clip_sequence(const ConvexPolygon& seed, const std::vector<Vec2>& dirs,
                            const std::vector<double>& offsets,
                            const std::vector<int>& order) {
  ConvexPolygon body = seed;
  for (int k : order) {
    if (is_empty(body)) break;
    body = clip(body, Halfspace2{dirs[k], offsets[k], false});
  }
  return body;
}

// Clipping a triangulated surface leaves crossing points strewn along the
// ridges and faces of the true intersection (the cut plane crosses interior
// triangulation edges, not just silhouette edges). The points are exact but
// redundant, and they compound across a long clip sequence. True corners are
// exactly the vertices supported by >= 3 of the applied planes, so the mesh
// is restored to canonical form by keeping those and rebuilding their hull.
ConvexPolytope drop_ridge_points(ConvexPolytope&& body, const std::vector<Vec3>& pn,
                                 const std::vector<double>& po) {
  if (body.v.size() <= 4) return std::move(body);
  const double tau = 1e-9 * diameter(body);
  std::vector<Vec3> corners;
  corners.reserve(body.v.size());
  for (const Vec3& v : body.v) {
    int active = 0;
    for (std::size_t j = 0; j < pn.size() && active < 3; ++j) {
      if (std::abs(dot(v, pn[j]) - po[j]) <= tau) ++active;
    }
    if (active >= 3) corners.push_back(v);
  }
  if (corners.size() < 4 || corners.size() == body.v.size()) return std::move(body);
  try {
    return build_polytope(corners);
  } catch (const Error&) {
    return std::move(body);
  }
}

ConvexPolytope clip_sequence(const ConvexPolytope& seed, const std::vector<Vec3>& dirs,
                             const std::vector<double>& offsets,
                             const std::vector<int>& order) {
  ConvexPolytope body = seed;
  // plane set applied so far: the box seed's six faces plus every cut that
  // changed the body (planes that cut nothing stay redundant forever)
  Vec3 lo = seed.v.empty() ? Vec3{} : seed.v[0], hi = lo;
  for (const Vec3& p : seed.v) {
    lo.x = std::min(lo.x, p.x); hi.x = std::max(hi.x, p.x);
    lo.y = std::min(lo.y, p.y); hi.y = std::max(hi.y, p.y);
    lo.z = std::min(lo.z, p.z); hi.z = std::max(hi.z, p.z);
  }
  std::vector<Vec3> pn = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<double> po = {hi.x, -lo.x, hi.y, -lo.y, hi.z, -lo.z};
  for (int k : order) {
    if (is_empty(body)) break;
    // mirror clip's own redundancy early-out so no-op planes cost nothing
    // and never enter the corner-support list
    const Vec3 u = normalized(dirs[k]);
    const double t = offsets[k] / norm(dirs[k]);
    double smin = std::numeric_limits<double>::infinity();
    for (const Vec3& v : body.v) smin = std::min(smin, t - dot(v, u));
    if (smin >= -1e-9 * diameter(body)) continue;
    pn.push_back(u);
    po.push_back(t);
    body = drop_ridge_points(clip(body, Halfspace3{dirs[k], offsets[k], false}), pn, po);
  }
  return body;
}

std::vector<int> natural_order(std::size_t n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

// --- measure-zero limit recovery ------------------------------------------
// When every cut passes through a common measure-zero set (two opposite cuts
// at delta = 1/2 meet in a slab), sequential clipping reports empty although
// the true intersection is a nonempty segment, sheet, or point. The limit
// object is recovered by re-clipping with the offsets relaxed by a tolerance
// band and snapping the relaxed vertices back onto their tightest constraint
// planes; a snap is kept only if the snapped point satisfies every original
// constraint.

Vec2 snap_to_planes(Vec2 v, const std::vector<Vec2>& un, const std::vector<double>& tn) {
  int i1 = -1, i2 = -1;
  double m1 = kInfDouble, m2 = kInfDouble;
  for (std::size_t i = 0; i < un.size(); ++i) {
    const double m = tn[i] - dot(v, un[i]);
    if (m < m1) { m1 = m; i1 = static_cast<int>(i); }
  }
  for (std::size_t i = 0; i < un.size(); ++i) {
    if (static_cast<int>(i) == i1) continue;
    const double m = tn[i] - dot(v, un[i]);
    if (m < m2 && std::abs(cross(un[i1], un[i])) > 1e-6) { m2 = m; i2 = static_cast<int>(i); }
  }
  if (i1 < 0 || i2 < 0) return v;
  const Vec2 a = un[i1], b = un[i2];
  const double det = a.x * b.y - a.y * b.x;
  return {(tn[i1] * b.y - tn[i2] * a.y) / det, (a.x * tn[i2] - b.x * tn[i1]) / det};
}

Vec3 snap_to_planes(Vec3 v, const std::vector<Vec3>& un, const std::vector<double>& tn) {
  int idx[3] = {-1, -1, -1};
  for (int pick = 0; pick < 3; ++pick) {
    double best = kInfDouble;
    for (std::size_t i = 0; i < un.size(); ++i) {
      if (static_cast<int>(i) == idx[0] || static_cast<int>(i) == idx[1]) continue;
      if (pick == 1 && norm(cross(un[idx[0]], un[i])) <= 1e-6) continue;
      if (pick == 2 &&
          std::abs(dot(un[idx[0]], cross(un[idx[1]], un[i]))) <= 1e-6) continue;
      const double m = tn[i] - dot(v, un[i]);
      if (m < best) { best = m; idx[pick] = static_cast<int>(i); }
    }
    if (idx[pick] < 0) return v;
  }
  const Vec3 a = un[idx[0]], b = un[idx[1]], c = un[idx[2]];
  const double det = dot(a, cross(b, c));
  return (cross(b, c) * tn[idx[0]] + cross(c, a) * tn[idx[1]] + cross(a, b) * tn[idx[2]]) /
         det;
}

template <class VecT>
std::vector<VecT> snap_and_filter(const std::vector<VecT>& relaxed,
                                  const std::vector<VecT>& un,
                                  const std::vector<double>& tn, double tau) {
  std::vector<VecT> pts;
  for (const VecT& v : relaxed) {
    const VecT x = snap_to_planes(v, un, tn);
    if (norm(x - v) > 16.0 * tau) continue;
    double worst = -kInfDouble;
    for (std::size_t i = 0; i < un.size(); ++i) {
      worst = std::max(worst, dot(x, un[i]) - tn[i]);
    }
    if (worst > tau) continue;
    bool dup = false;
    for (const VecT& p : pts) {
      if (norm(p - x) <= tau) { dup = true; break; }
    }
    if (!dup) pts.push_back(x);
  }
  return pts;
}

// two farthest-apart points; degenerate sets collapse to one
template <class VecT>
std::vector<VecT> extreme_pair(const std::vector<VecT>& pts, double tau) {
  std::size_t ia = 0, ib = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = norm(pts[i] - pts[j]);
      if (d > best) { best = d; ia = i; ib = j; }
    }
  }
  if (best <= tau) return {pts[ia]};
  return {pts[ia], pts[ib]};
}

ConvexPolygon recover_limit(const ConvexPolygon& seed, const std::vector<Vec2>& dirs,
                            const std::vector<double>& offsets) {
  const double tau = 1e-9 * diameter(seed);
  double lx = seed.v[0].x, hx = lx, ly = seed.v[0].y, hy = ly;
  for (const Vec2& p : seed.v) {
    lx = std::min(lx, p.x); hx = std::max(hx, p.x);
    ly = std::min(ly, p.y); hy = std::max(hy, p.y);
  }
  std::vector<Vec2> un = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  std::vector<double> tn = {hx, -lx, hy, -ly};
  std::vector<double> relaxed_off(offsets);
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const double len = norm(dirs[k]);
    un.push_back(dirs[k] / len);
    tn.push_back(offsets[k] / len);
    relaxed_off[k] += tau * len;
  }
  const ConvexPolygon relaxed =
      clip_sequence(seed, dirs, relaxed_off, natural_order(dirs.size()));
  if (is_empty(relaxed)) return {};
  std::vector<Vec2> pts = snap_and_filter(relaxed.v, un, tn, tau);
  if (pts.empty()) return {};
  if (pts.size() >= 3) {
    try {
      return build_polygon(pts);
    } catch (const Error&) {
    }
  }
  return ConvexPolygon{extreme_pair(pts, tau)};
}

ConvexPolytope recover_limit(const ConvexPolytope& seed, const std::vector<Vec3>& dirs,
                             const std::vector<double>& offsets) {
  const double tau = 1e-9 * diameter(seed);
  Vec3 lo = seed.v[0], hi = lo;
  for (const Vec3& p : seed.v) {
    lo.x = std::min(lo.x, p.x); hi.x = std::max(hi.x, p.x);
    lo.y = std::min(lo.y, p.y); hi.y = std::max(hi.y, p.y);
    lo.z = std::min(lo.z, p.z); hi.z = std::max(hi.z, p.z);
  }
  std::vector<Vec3> un = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<double> tn = {hi.x, -lo.x, hi.y, -lo.y, hi.z, -lo.z};
  std::vector<double> relaxed_off(offsets);
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const double len = norm(dirs[k]);
    un.push_back(dirs[k] / len);
    tn.push_back(offsets[k] / len);
    relaxed_off[k] += tau * len;
  }
  const ConvexPolytope relaxed =
      clip_sequence(seed, dirs, relaxed_off, natural_order(dirs.size()));
  if (is_empty(relaxed)) return {};
  std::vector<Vec3> pts = snap_and_filter(relaxed.v, un, tn, tau);
  if (pts.empty()) return {};
  if (pts.size() >= 4) {
    try {
      return build_polytope(pts);
    } catch (const Error&) {
    }
  }
  // flat or lower-dimensional limit: keep the deduplicated vertex set; the
  // classification and support queries need vertices only
  ConvexPolytope soup;
  soup.v = pts.size() > 2 ? pts : extreme_pair(pts, tau);
  return soup;
}

// clip order sorted by cut depth relative to c, deepest first; redundant
// planes then hit the early-out path of clip
template <class VecT>
std::vector<int> depth_order(const std::vector<VecT>& dirs,
                             const std::vector<double>& offsets, VecT c) {
  std::vector<int> order = natural_order(dirs.size());
  std::vector<double> depth(dirs.size());
  for (std::size_t k = 0; k < dirs.size(); ++k) depth[k] = offsets[k] - dot(c, dirs[k]);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return depth[i] < depth[j]; });
  return order;
}

std::vector<int> stride_subset(int n, int m) {
  std::vector<int> idx;
  idx.reserve(m);
  for (int j = 0; j < m; ++j) idx.push_back(static_cast<int>((static_cast<long long>(j) * n) / m));
  return idx;
}

template <class Body, class VecT>
struct FloatingTraits;

template <>
struct FloatingTraits<ConvexPolygon, Vec2> {
  using FB = FloatingBody2;
  static constexpr int dim = 2;
};
template <>
struct FloatingTraits<ConvexPolytope, Vec3> {
  using FB = FloatingBody3;
  static constexpr int dim = 3;
};

template <class Body, class VecT, class SolveAll, class Seed>
typename FloatingTraits<Body, VecT>::FB floating_body_impl(
    const Body& K, double delta, const std::vector<VecT>& dirs,
    const SolveAll& solve_all, const Seed& seed_of) {
  check_delta(delta);
  if (dirs.empty()) fail(errc::too_few_samples, "direction set is empty");
  typename FloatingTraits<Body, VecT>::FB fb;
  fb.delta = delta;
  fb.directions = dirs;
  fb.offsets = solve_all(dirs);
  Body body = clip_sequence(seed_of(K), dirs, fb.offsets, natural_order(dirs.size()));
  if (is_empty(body)) body = recover_limit(seed_of(K), dirs, fb.offsets);
  const double scale = diameter(K);
  if (is_empty(body)) {
    fb.kind = BodyClass::Empty;
  } else if (diameter(body) <= 1e-6 * scale) {
    fb.kind = BodyClass::Point;
    VecT avg{};
    for (const auto& v : body.v) avg += v;
    fb.point = avg * (1.0 / static_cast<double>(body.v.size()));
    fb.body = body;
  } else {
    fb.kind = BodyClass::Body;
    fb.body = body;
  }
  return fb;
}

// Escalating emptiness certificate: a subset intersection that is already
// empty certifies empty; a feasible witness point certifies non-empty; the
// full-set construction decides the rest.
template <class Body, class VecT>
bool floating_empty(const Body& seed, const std::vector<VecT>& dirs,
                    const std::vector<double>& offsets, VecT center) {
  const int n = static_cast<int>(dirs.size());
  std::vector<int> levels;
  for (int L : {512, 2048}) {
    if (L < n) levels.push_back(L);
  }
  levels.push_back(n);
  for (int L : levels) {
    const std::vector<int> idx = stride_subset(n, L);
    std::vector<VecT> sub_dirs;
    std::vector<double> sub_off;
    sub_dirs.reserve(idx.size());
    sub_off.reserve(idx.size());
    for (int k : idx) {
      sub_dirs.push_back(dirs[k]);
      sub_off.push_back(offsets[k]);
    }
    const std::vector<int> order = depth_order(sub_dirs, sub_off, center);
    const Body sub = clip_sequence(seed, sub_dirs, sub_off, order);
    if (is_empty(sub)) return true;
    if (L == n) return false;
    std::vector<VecT> candidates = sub.v;
    VecT avg{};
    for (const auto& v : sub.v) avg += v;
    candidates.push_back(avg * (1.0 / static_cast<double>(sub.v.size())));
    for (const auto& c : candidates) {
      double worst = -std::numeric_limits<double>::infinity();
      for (int k = 0; k < n; ++k) worst = std::max(worst, dot(c, dirs[k]) - offsets[k]);
      if (worst <= 0.0) return false;
    }
  }
  return false;
}

template <class Body, class VecT, class SolveAll, class Seed, class Centroid>
double critical_delta_impl(const Body& K, const std::vector<VecT>& dirs, double tol,
                           int dim, const SolveAll& solve_all, const Seed& seed_of,
                           const Centroid& centroid_of) {
  if (dirs.empty()) fail(errc::too_few_samples, "direction set is empty");
  if (is_centrally_symmetric(K, 1e-9 * diameter(K))) return 0.5;
  const Body seed = seed_of(K);
  const VecT c = centroid_of(K);
  auto empty_at = [&](double d) {
    const std::vector<double> offsets = solve_all(dirs, d);
    return floating_empty<Body, VecT>(seed, dirs, offsets, c);
  };
  const double ratio = static_cast<double>(dim) / (dim + 1);
  double a = 0.999 * std::pow(ratio, dim);  // non-empty: every cut keeps the centroid
  double b = 0.5;
  if (!empty_at(b)) return 0.5;
  while (empty_at(a)) {
    a *= 0.98;
    if (a < 1.0 / (dim + 1)) return a;
  }
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (empty_at(mid)) b = mid; else a = mid;
  }
  return 0.5 * (a + b);
}

}  // namespace

double cut_offset_scan(const PolygonDirScan& ds, double delta, double tol) {
  return solve_cut(ds, delta, tol);
}

double cut_offset_scan(const PolytopeDirScan& ds, double delta, double tol) {
  return solve_cut(ds, delta, tol);
}

double cut_offset(const ConvexPolygon& K, Vec2 u, double delta, double tol) {
  return solve_cut(PolygonDirScan(K, u), delta, tol);
}

double cut_offset(const ConvexPolytope& K, Vec3 u, double delta, double tol) {
  const PolytopeScan scan(K);
  return solve_cut(PolytopeDirScan(scan, u), delta, tol);
}

CutRecord2 cap_record_scan(const PolygonDirScan& ds, double delta, double tol) {
  CutRecord2 rec;
  rec.u = ds.direction();
  rec.delta = delta;
  rec.offset = solve_cut(ds, delta, tol);
  rec.cap = ds.cap_moments(rec.offset);
  rec.cap_centroid = rec.cap.centroid;
  rec.sec = ds.section(rec.offset);
  rec.sec_moments = section_moments(rec.sec);
  return rec;
}

CutRecord3 cap_record_scan(const PolytopeDirScan& ds, double delta, double tol) {
  CutRecord3 rec;
  rec.u = ds.direction();
  rec.delta = delta;
  rec.offset = solve_cut(ds, delta, tol);
  rec.cap = ds.cap_moments(rec.offset);
  rec.cap_centroid = rec.cap.centroid;
  rec.sec = ds.section(rec.offset);
  rec.sec_moments = section_moments(rec.sec);
  return rec;
}

CutRecord2 cap_record(const ConvexPolygon& K, Vec2 u, double delta, double tol) {
  return cap_record_scan(PolygonDirScan(K, u), delta, tol);
}

CutRecord3 cap_record(const ConvexPolytope& K, Vec3 u, double delta, double tol) {
  const PolytopeScan scan(K);
  return cap_record_scan(PolytopeDirScan(scan, u), delta, tol);
}

FloatingBody2 floating_body(const ConvexPolygon& K, double delta,
                            const std::vector<Vec2>& directions, double tol, Exec exec) {
  auto solve_all = [&](const std::vector<Vec2>& dirs) {
    std::vector<double> offsets(dirs.size());
    for_each_index(dirs.size(), exec, [&](std::size_t i) {
      offsets[i] = solve_cut(PolygonDirScan(K, dirs[i]), delta, tol);
    });
    return offsets;
  };
  return floating_body_impl<ConvexPolygon, Vec2>(K, delta, directions, solve_all,
                                                 [](const ConvexPolygon& P) { return box_polygon(P); });
}

FloatingBody3 floating_body(const ConvexPolytope& K, double delta,
                            const std::vector<Vec3>& directions, double tol, Exec exec) {
  const PolytopeScan scan(K);
  auto solve_all = [&](const std::vector<Vec3>& dirs) {
    std::vector<double> offsets(dirs.size());
    for_each_index(dirs.size(), exec, [&](std::size_t i) {
      offsets[i] = solve_cut(PolytopeDirScan(scan, dirs[i]), delta, tol);
    });
    return offsets;
  };
  return floating_body_impl<ConvexPolytope, Vec3>(K, delta, directions, solve_all,
                                                  [](const ConvexPolytope& P) { return box_polytope(P); });
}

double critical_delta(const ConvexPolygon& K, const std::vector<Vec2>& directions,
                      double tol, Exec exec) {
  auto solve_all = [&](const std::vector<Vec2>& dirs, double d) {
    std::vector<double> offsets(dirs.size());
    for_each_index(dirs.size(), exec, [&](std::size_t i) {
      offsets[i] = solve_cut(PolygonDirScan(K, dirs[i]), d, kVolumeTol);
    });
    return offsets;
  };
  return critical_delta_impl<ConvexPolygon, Vec2>(
      K, directions, tol, 2, solve_all,
      [](const ConvexPolygon& P) { return box_polygon(P); },
      [](const ConvexPolygon& P) { return moments(P).centroid; });
}

double critical_delta(const ConvexPolytope& K, const std::vector<Vec3>& directions,
                      double tol, Exec exec) {
  const PolytopeScan scan(K);
  auto solve_all = [&](const std::vector<Vec3>& dirs, double d) {
    std::vector<double> offsets(dirs.size());
    for_each_index(dirs.size(), exec, [&](std::size_t i) {
      offsets[i] = solve_cut(PolytopeDirScan(scan, dirs[i]), d, kVolumeTol);
    });
    return offsets;
  };
  return critical_delta_impl<ConvexPolytope, Vec3>(
      K, directions, tol, 3, solve_all,
      [](const ConvexPolytope& P) { return box_polytope(P); },
      [](const ConvexPolytope& P) { return moments(P).centroid; });
}

namespace {

// residual of one direction: distance from the section centroid to the
// support set of the floating body in that direction
double residual2(const ConvexPolygon& K, const FloatingBody2& fb, std::size_t i,
                 double tie_eps) {
  const Vec2 u = fb.directions[i];
  const double t = fb.offsets[i];
  const Section2 sec = section(K, u, t);
  const SegmentMoments sm = section_moments(sec);
  const Vec2 g = to_ambient(sec, sm.centroid);
  if (fb.kind == BodyClass::Point) return norm(g - fb.point);
  double h = -std::numeric_limits<double>::infinity();
  for (const Vec2& v : fb.body.v) h = std::max(h, dot(v, u));
  Vec2 lo{}, hi{};
  double slo = std::numeric_limits<double>::infinity();
  double shi = -std::numeric_limits<double>::infinity();
  const Vec2 tang = perp(u);
  for (const Vec2& v : fb.body.v) {
    if (dot(v, u) < h - tie_eps) continue;
    const double s = dot(v, tang);
    if (s < slo) { slo = s; lo = v; }
    if (s > shi) { shi = s; hi = v; }
  }
  return point_segment(g, lo, hi);
}

double residual3(const ConvexPolytope& K, const FloatingBody3& fb, std::size_t i,
                 double tie_eps) {
  const Vec3 u = fb.directions[i];
  const double t = fb.offsets[i];
  const Section3 sec = section(K, u, t);
  const Moments2 sm = section_moments(sec);
  const Vec3 g = to_ambient(sec, sm.centroid);
  if (fb.kind == BodyClass::Point) return norm(g - fb.point);
  double h = -std::numeric_limits<double>::infinity();
  for (const Vec3& v : fb.body.v) h = std::max(h, dot(v, u));
  Vec3 e1, e2;
  tangent_basis(u, e1, e2);
  std::vector<Vec2> ties;
  for (const Vec3& v : fb.body.v) {
    if (dot(v, u) < h - tie_eps) continue;
    ties.push_back({dot(v, e1), dot(v, e2)});
  }
  const double planar = planar_hull_distance(ties, {dot(g, e1), dot(g, e2)});
  return std::hypot(planar, t - h);
}

}  // namespace

std::vector<double> dupin_tangency_residuals(const ConvexPolygon& K, double delta,
                                             const std::vector<Vec2>& directions,
                                             double tol, Exec exec) {
  const FloatingBody2 fb = floating_body(K, delta, directions, tol, exec);
  if (fb.kind == BodyClass::Empty) {
    fail(errc::empty_floating_body, "floating body is empty at this delta");
  }
  const double tie_eps = 1e-9 * diameter(K);
  std::vector<double> res(directions.size());
  for_each_index(directions.size(), exec,
                 [&](std::size_t i) { res[i] = residual2(K, fb, i, tie_eps); });
  return res;
}

std::vector<double> dupin_tangency_residuals(const ConvexPolytope& K, double delta,
                                             const std::vector<Vec3>& directions,
                                             double tol, Exec exec) {
  const FloatingBody3 fb = floating_body(K, delta, directions, tol, exec);
  if (fb.kind == BodyClass::Empty) {
    fail(errc::empty_floating_body, "floating body is empty at this delta");
  }
  const double tie_eps = 1e-9 * diameter(K);
  std::vector<double> res(directions.size());
  for_each_index(directions.size(), exec,
                 [&](std::size_t i) { res[i] = residual3(K, fb, i, tie_eps); });
  return res;
}

double dupin_tangency_residual(const ConvexPolygon& K, double delta, Vec2 u,
                               const std::vector<Vec2>& directions, double tol) {
  FloatingBody2 fb = floating_body(K, delta, directions, tol, Exec::Serial);
  if (fb.kind == BodyClass::Empty) {
    fail(errc::empty_floating_body, "floating body is empty at this delta");
  }
  fb.directions.push_back(u);
  fb.offsets.push_back(cut_offset(K, u, delta, tol));
  return residual2(K, fb, fb.directions.size() - 1, 1e-9 * diameter(K));
}

double dupin_tangency_residual(const ConvexPolytope& K, double delta, Vec3 u,
                               const std::vector<Vec3>& directions, double tol) {
  FloatingBody3 fb = floating_body(K, delta, directions, tol, Exec::Serial);
  if (fb.kind == BodyClass::Empty) {
    fail(errc::empty_floating_body, "floating body is empty at this delta");
  }
  fb.directions.push_back(u);
  fb.offsets.push_back(cut_offset(K, u, delta, tol));
  return residual3(K, fb, fb.directions.size() - 1, 1e-9 * diameter(K));
}

bool is_centrally_symmetric(const ConvexPolygon& K, double slack) {
  const Vec2 c = moments(K).centroid;
  for (const Vec2& v : K.v) {
    if (!contains(K, c * 2.0 - v, slack)) return false;
  }
  return true;
}

bool is_centrally_symmetric(const ConvexPolytope& K, double slack) {
  const Vec3 c = moments(K).centroid;
  for (const Vec3& v : K.v) {
    if (max_face_excess(K, c * 2.0 - v) > slack) return false;
  }
  return true;
}

}  // namespace floatlab
