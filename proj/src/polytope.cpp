#include "floatlab/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "floatlab/errors.hpp"

namespace floatlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Box3 {
  Vec3 lo{kInf, kInf, kInf};
  Vec3 hi{-kInf, -kInf, -kInf};
};

Box3 bbox(const std::vector<Vec3>& v) {
  Box3 b;
  for (const Vec3& p : v) {
    b.lo.x = std::min(b.lo.x, p.x);
    b.lo.y = std::min(b.lo.y, p.y);
    b.lo.z = std::min(b.lo.z, p.z);
    b.hi.x = std::max(b.hi.x, p.x);
    b.hi.y = std::max(b.hi.y, p.y);
    b.hi.z = std::max(b.hi.z, p.z);
  }
  return b;
}

// Signed-tetrahedron accumulator against the (shifted) origin. Per-tet
// integrals: vol = det/6, first moment = det*(a+b+c)/24, and
// int x_p x_q = det/120 * (s_p s_q + a_p a_q + b_p b_q + c_p c_q), s = a+b+c.
// Raw det-weighted sums are kept; divisions and the shift back happen once.
struct TetAcc {
  double v6 = 0.0;
  Vec3 m1{};
  double xx = 0, yy = 0, zz = 0, xy = 0, xz = 0, yz = 0;

  void add(Vec3 a, Vec3 b, Vec3 c) {
    const double det = dot(a, cross(b, c));
    v6 += det;
    const Vec3 s = a + b + c;
    m1 += det * s;
    xx += det * (s.x * s.x + a.x * a.x + b.x * b.x + c.x * c.x);
    yy += det * (s.y * s.y + a.y * a.y + b.y * b.y + c.y * c.y);
    zz += det * (s.z * s.z + a.z * a.z + b.z * b.z + c.z * c.z);
    xy += det * (s.x * s.y + a.x * a.y + b.x * b.y + c.x * c.y);
    xz += det * (s.x * s.z + a.x * a.z + b.x * b.z + c.x * c.z);
    yz += det * (s.y * s.z + a.y * a.z + b.y * b.z + c.y * c.z);
  }

  Moments3 finish(Vec3 shift) const {
    Moments3 m;
    const double vol = v6 / 6.0;
    if (!(vol > 0.0)) {
      m.centroid = shift;
      return m;
    }
    m.measure = vol;
    const Vec3 s1 = m1 / 24.0;  // integrals of x', y', z'
    m.centroid = s1 / vol + shift;
    m.sxx = xx / 120.0 + 2.0 * shift.x * s1.x + shift.x * shift.x * vol;
    m.syy = yy / 120.0 + 2.0 * shift.y * s1.y + shift.y * shift.y * vol;
    m.szz = zz / 120.0 + 2.0 * shift.z * s1.z + shift.z * shift.z * vol;
    m.sxy = xy / 120.0 + shift.x * s1.y + shift.y * s1.x + shift.x * shift.y * vol;
    m.sxz = xz / 120.0 + shift.x * s1.z + shift.z * s1.x + shift.x * shift.z * vol;
    m.syz = yz / 120.0 + shift.y * s1.z + shift.z * s1.y + shift.y * shift.z * vol;
    return m;
  }
};

int classify(double d, double t, double eps) {
  if (d > t + eps) return 1;
  if (d < t - eps) return -1;
  return 0;
}

int64_t edge_key(int a, int b, int64_t stride) { return a * stride + b; }

// drop vertices not referenced by any face, preserving first-use order of the
// original indices
void compact_vertices(ConvexPolytope& P) {
  std::vector<int> remap(P.v.size(), -1);
  std::vector<Vec3> nv;
  nv.reserve(P.v.size());
  auto use = [&](int i) {
    if (remap[i] < 0) {
      remap[i] = static_cast<int>(nv.size());
      nv.push_back(P.v[i]);
    }
    return remap[i];
  };
  // two passes keep vertex order independent of face traversal details
  std::vector<char> used(P.v.size(), 0);
  for (const Face& f : P.f) used[f.a] = used[f.b] = used[f.c] = 1;
  for (std::size_t i = 0; i < P.v.size(); ++i) {
    if (used[i]) use(static_cast<int>(i));
  }
  for (Face& f : P.f) {
    f.a = remap[f.a];
    f.b = remap[f.b];
    f.c = remap[f.c];
  }
  P.v = std::move(nv);
}

double volume_of(const ConvexPolytope& P, Vec3 shift) {
  TetAcc acc;
  for (const Face& f : P.f) acc.add(P.v[f.a] - shift, P.v[f.b] - shift, P.v[f.c] - shift);
  return acc.v6 / 6.0;
}

}  // namespace

double diameter(const ConvexPolytope& P) {
  if (P.v.empty()) return 0.0;
  const Box3 b = bbox(P.v);
  return norm(b.hi - b.lo);
}

ConvexPolytope build_polytope(const std::vector<Vec3>& pts) {
  const std::size_t n = pts.size();
  if (n < 4) fail(errc::degenerate_input, "polytope needs at least 4 points");
  const Box3 bb = bbox(pts);
  const double diag = norm(bb.hi - bb.lo);
  const double eps = 1e-9 * diag;
  if (!(diag > 0.0)) fail(errc::degenerate_input, "all points coincide");

  // initial simplex from extreme points
  std::size_t i0 = 0;
  for (std::size_t i = 1; i < n; ++i) {
    const Vec3 a = pts[i], b = pts[i0];
    if (a.x < b.x || (a.x == b.x && (a.y < b.y || (a.y == b.y && a.z < b.z)))) i0 = i;
  }
  std::size_t i1 = i0;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = norm2(pts[i] - pts[i0]);
    if (d > best) best = d, i1 = i;
  }
  if (!(std::sqrt(best) > eps)) fail(errc::degenerate_input, "points coincide");
  const Vec3 axis = pts[i1] - pts[i0];
  std::size_t i2 = i0;
  best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = norm2(cross(axis, pts[i] - pts[i0]));
    if (d > best) best = d, i2 = i;
  }
  if (!(std::sqrt(best) / norm(axis) > eps)) fail(errc::degenerate_input, "points are collinear");
  const Vec3 nrm = normalized(cross(axis, pts[i2] - pts[i0]));
  std::size_t i3 = i0;
  best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::fabs(dot(nrm, pts[i] - pts[i0]));
    if (d > best) best = d, i3 = i;
  }
  if (!(best > eps)) fail(errc::degenerate_input, "points are coplanar");

  int A = static_cast<int>(i0), B = static_cast<int>(i1);
  int C = static_cast<int>(i2), D = static_cast<int>(i3);
  if (dot(cross(pts[B] - pts[A], pts[C] - pts[A]), pts[D] - pts[A]) < 0.0) std::swap(B, C);

  struct HullFace {
    int a, b, c;
    Vec3 n;
    double off;
    bool alive;
  };
  std::vector<HullFace> faces;
  // winding is forced by edge pairing (initial tetra by construction, cone
  // faces by the horizon edge direction), so normals are taken as computed
  auto push_face = [&](int a, int b, int c) {
    Vec3 fn = cross(pts[b] - pts[a], pts[c] - pts[a]);
    const double len = norm(fn);
    if (!(len > 0.0)) fail(errc::degenerate_input, "degenerate hull face");
    fn = fn / len;
    const double off = dot(fn, pts[a]);
    faces.push_back(HullFace{a, b, c, fn, off, true});
  };
  push_face(A, C, B);
  push_face(A, B, D);
  push_face(A, D, C);
  push_face(B, C, D);

  const int64_t stride = static_cast<int64_t>(n) + 1;
  std::unordered_set<int64_t> vis_edges;
  std::vector<std::size_t> visible;
  std::size_t dead = 0;

  for (std::size_t i = 0; i < n; ++i) {
    if (i == i0 || i == i1 || i == i2 || i == i3) continue;
    const Vec3 p = pts[i];
    visible.clear();
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
      if (faces[fi].alive && dot(faces[fi].n, p) - faces[fi].off > eps) visible.push_back(fi);
    }
    if (visible.empty()) continue;

    vis_edges.clear();
    for (std::size_t fi : visible) {
      const HullFace& f = faces[fi];
      vis_edges.insert(edge_key(f.a, f.b, stride));
      vis_edges.insert(edge_key(f.b, f.c, stride));
      vis_edges.insert(edge_key(f.c, f.a, stride));
    }
    for (std::size_t fi : visible) {
      faces[fi].alive = false;
      ++dead;
    }
    const int pi = static_cast<int>(i);
    for (std::size_t fi : visible) {
      const HullFace f = faces[fi];
      const int ea[3] = {f.a, f.b, f.c};
      const int eb[3] = {f.b, f.c, f.a};
      for (int k = 0; k < 3; ++k) {
        if (vis_edges.count(edge_key(eb[k], ea[k], stride))) continue;  // interior edge
        push_face(ea[k], eb[k], pi);
      }
    }
    if (dead > faces.size() / 2 && faces.size() > 64) {
      std::vector<HullFace> packed;
      packed.reserve(faces.size() - dead);
      for (const HullFace& f : faces) {
        if (f.alive) packed.push_back(f);
      }
      faces = std::move(packed);
      dead = 0;
    }
  }

  ConvexPolytope out;
  out.v = pts;
  for (const HullFace& f : faces) {
    if (f.alive) out.f.push_back(Face{f.a, f.b, f.c});
  }
  compact_vertices(out);
  if (out.f.size() < 4 || volume_of(out, (bb.lo + bb.hi) / 2.0) <= 0.0) {
    fail(errc::degenerate_input, "hull is degenerate");
  }
  return out;
}

Moments3 moments(const ConvexPolytope& P) {
  if (P.v.empty()) fail(errc::empty_body, "moments of an empty body");
  if (P.f.empty()) {
    Moments3 m;
    Vec3 s{};
    for (const Vec3& p : P.v) s += p;
    m.centroid = s / static_cast<double>(P.v.size());
    return m;
  }
  const Box3 b = bbox(P.v);
  const Vec3 shift = (b.lo + b.hi) / 2.0;
  TetAcc acc;
  for (const Face& f : P.f) acc.add(P.v[f.a] - shift, P.v[f.b] - shift, P.v[f.c] - shift);
  return acc.finish(shift);
}

ConvexPolytope clip(const ConvexPolytope& P, const Halfspace3& h) {
  if (P.v.empty() || P.f.empty()) return {};
  const double nn = norm(h.normal);
  if (!(nn > 0.0)) fail(errc::degenerate_input, "halfspace normal is zero");
  const Vec3 n = h.normal / nn;
  const double off = h.offset / nn;
  const double sgn = h.keep_upper ? 1.0 : -1.0;
  const double eps = 1e-9 * diameter(P);

  const std::size_t nv = P.v.size();
  std::vector<double> s(nv);
  double smin = kInf, smax = -kInf;
  for (std::size_t i = 0; i < nv; ++i) {
    s[i] = sgn * (dot(P.v[i], n) - off);
    smin = std::min(smin, s[i]);
    smax = std::max(smax, s[i]);
  }
  if (smin >= -eps) return P;  // plane does not cut
  if (smax <= eps) return {};  // nothing remains

  ConvexPolytope out;
  std::vector<int> kept(nv, -1);
  auto keep_vertex = [&](int i) {
    if (kept[i] < 0) {
      kept[i] = static_cast<int>(out.v.size());
      out.v.push_back(P.v[i]);
    }
    return kept[i];
  };
  const int64_t stride = static_cast<int64_t>(nv) + 1;
  std::unordered_map<int64_t, int> cross_idx;
  auto crossing = [&](int i, int j) {
    int a = i, b = j;
    if (a > b) std::swap(a, b);
    const int64_t key = edge_key(a, b, stride);
    auto it = cross_idx.find(key);
    if (it != cross_idx.end()) return it->second;
    const double w = s[a] / (s[a] - s[b]);
    const Vec3 x = P.v[a] + (P.v[b] - P.v[a]) * w;
    const int idx = static_cast<int>(out.v.size());
    out.v.push_back(x);
    cross_idx.emplace(key, idx);
    return idx;
  };

  std::vector<int> poly;
  for (const Face& f : P.f) {
    const int tri[3] = {f.a, f.b, f.c};
    poly.clear();
    for (int k = 0; k < 3; ++k) {
      const int i = tri[k], j = tri[(k + 1) % 3];
      const int ci = classify(s[i], 0.0, eps);
      const int cj = classify(s[j], 0.0, eps);
      if (ci >= 0) poly.push_back(keep_vertex(i));
      if ((ci > 0 && cj < 0) || (ci < 0 && cj > 0)) poly.push_back(crossing(i, j));
    }
    // dedup identical consecutive indices (crossing landing on a kept vertex)
    std::size_t w = 0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (w == 0 || poly[k] != poly[w - 1]) poly[w++] = poly[k];
    }
    poly.resize(w);
    while (poly.size() > 1 && poly.front() == poly.back()) poly.pop_back();
    if (poly.size() < 3) continue;
    for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
      if (poly[0] == poly[k] || poly[k] == poly[k + 1] || poly[0] == poly[k + 1]) continue;
      out.f.push_back(Face{poly[0], poly[k], poly[k + 1]});
    }
  }
  if (out.f.empty()) return {};

  // close the cut: directed edges whose reverse is absent bound the hole
  const int64_t ostride = static_cast<int64_t>(out.v.size()) + 1;
  std::unordered_set<int64_t> dir_edges;
  for (const Face& f : out.f) {
    dir_edges.insert(edge_key(f.a, f.b, ostride));
    dir_edges.insert(edge_key(f.b, f.c, ostride));
    dir_edges.insert(edge_key(f.c, f.a, ostride));
  }
  std::unordered_map<int, int> next;  // cut-face successor: for side edge (x,y), next[y] = x
  std::vector<int> starts;
  for (const Face& f : out.f) {
    const int ea[3] = {f.a, f.b, f.c};
    const int eb[3] = {f.b, f.c, f.a};
    for (int k = 0; k < 3; ++k) {
      if (dir_edges.count(edge_key(eb[k], ea[k], ostride))) continue;
      if (next.emplace(eb[k], ea[k]).second) starts.push_back(eb[k]);
    }
  }
  std::unordered_set<int> done;
  for (int s0 : starts) {
    if (done.count(s0)) continue;
    std::vector<int> loop;
    int cur = s0;
    while (loop.size() <= next.size()) {
      loop.push_back(cur);
      done.insert(cur);
      auto it = next.find(cur);
      if (it == next.end()) break;
      cur = it->second;
      if (cur == s0) break;
    }
    if (cur != s0 || loop.size() < 3) continue;
    for (std::size_t k = 1; k + 1 < loop.size(); ++k) {
      if (loop[0] == loop[k] || loop[k] == loop[k + 1] || loop[0] == loop[k + 1]) continue;
      out.f.push_back(Face{loop[0], loop[k], loop[k + 1]});
    }
  }

  compact_vertices(out);
  if (out.f.size() < 4) return {};
  const Box3 ob = bbox(out.v);
  if (volume_of(out, (ob.lo + ob.hi) / 2.0) <= 0.0) return {};
  return out;
}

Section3 section(const ConvexPolytope& P, Vec3 u, double t) {
  if (P.v.empty() || P.f.empty()) fail(errc::empty_body, "section of an empty body");
  const Vec3 un = normalized(u);
  const double eps = 1e-9 * diameter(P);
  Vec3 e1, e2;
  tangent_basis(un, e1, e2);

  const std::size_t nv = P.v.size();
  std::vector<double> d(nv);
  for (std::size_t i = 0; i < nv; ++i) d[i] = dot(P.v[i], un);

  std::vector<Vec2> hits;
  for (std::size_t i = 0; i < nv; ++i) {
    if (classify(d[i], t, eps) == 0) hits.push_back(Vec2{dot(P.v[i], e1), dot(P.v[i], e2)});
  }
  const int64_t stride = static_cast<int64_t>(nv) + 1;
  std::unordered_set<int64_t> seen;
  for (const Face& f : P.f) {
    const int tri[3] = {f.a, f.b, f.c};
    for (int k = 0; k < 3; ++k) {
      int a = tri[k], b = tri[(k + 1) % 3];
      if (a > b) std::swap(a, b);
      if (!seen.insert(edge_key(a, b, stride)).second) continue;
      const int ca = classify(d[a], t, eps);
      const int cb = classify(d[b], t, eps);
      if ((ca > 0 && cb < 0) || (ca < 0 && cb > 0)) {
        const double w = (t - d[a]) / (d[b] - d[a]);
        const Vec3 x = P.v[a] + (P.v[b] - P.v[a]) * w;
        hits.push_back(Vec2{dot(x, e1), dot(x, e2)});
      }
    }
  }
  if (hits.empty()) fail(errc::empty_section, "cut plane misses the body");

  Section3 sec;
  sec.frame = SectionFrame3{un * t, e1, e2, un};
  try {
    sec.poly = build_polygon(hits);
  } catch (const Error&) {
    // tangent contact: keep the extreme hit points as a degenerate section
    std::sort(hits.begin(), hits.end(), [](Vec2 a, Vec2 b) {
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    sec.poly.v.push_back(hits.front());
    if (norm(hits.back() - hits.front()) > eps) sec.poly.v.push_back(hits.back());
  }
  return sec;
}

Moments2 section_moments(const Section3& s) { return moments(s.poly); }

double support_value(const ConvexPolytope& P, Vec3 u) {
  if (P.v.empty()) fail(errc::empty_body, "support of an empty body");
  double best = -kInf;
  for (const Vec3& p : P.v) best = std::max(best, dot(p, u));
  return best;
}

bool contains(const ConvexPolytope& P, Vec3 p, double slack) {
  return max_face_excess(P, p) <= slack;
}

double max_face_excess(const ConvexPolytope& P, Vec3 p) {
  if (P.v.empty() || P.f.empty()) fail(errc::empty_body, "empty body");
  double worst = -kInf;
  for (const Face& f : P.f) {
    const Vec3 a = P.v[f.a];
    Vec3 fn = cross(P.v[f.b] - a, P.v[f.c] - a);
    const double len = norm(fn);
    if (!(len > 0.0)) continue;
    worst = std::max(worst, dot(fn, p - a) / len);
  }
  return worst;
}

double radial_function(const ConvexPolytope& P, Vec3 xi) {
  if (P.v.empty() || P.f.empty()) fail(errc::empty_body, "empty body");
  const Vec3 dir = normalized(xi);
  double r = kInf;
  for (const Face& f : P.f) {
    const Vec3 a = P.v[f.a];
    const Vec3 fn = cross(P.v[f.b] - a, P.v[f.c] - a);
    const double den = dot(fn, dir);
    if (den > 0.0) {
      const double off = dot(fn, a);
      if (off <= 0.0) fail(errc::degenerate_input, "origin is not inside the body");
      r = std::min(r, off / den);
    }
  }
  if (!(r < kInf)) fail(errc::degenerate_input, "unbounded radial ray");
  return r;
}

bool validate(const ConvexPolytope& P, std::string* why) {
  auto bad = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (P.v.size() < 4 || P.f.size() < 4) return bad("too few vertices or faces");
  const int64_t stride = static_cast<int64_t>(P.v.size()) + 1;
  std::unordered_map<int64_t, int> count;
  for (const Face& f : P.f) {
    if (f.a == f.b || f.b == f.c || f.a == f.c) return bad("degenerate face indices");
    count[edge_key(f.a, f.b, stride)]++;
    count[edge_key(f.b, f.c, stride)]++;
    count[edge_key(f.c, f.a, stride)]++;
  }
  std::size_t undirected = 0;
  for (const auto& [key, c] : count) {
    if (c != 1) return bad("directed edge repeated");
    const int a = static_cast<int>(key / stride);
    const int b = static_cast<int>(key % stride);
    if (!count.count(edge_key(b, a, stride))) return bad("boundary edge unpaired");
    if (a < b) ++undirected;
  }
  const long long euler = static_cast<long long>(P.v.size()) -
                          static_cast<long long>(undirected) +
                          static_cast<long long>(P.f.size());
  if (euler != 2) return bad("Euler count is not 2");
  const Moments3 m = moments(P);
  if (!(m.measure > 0.0)) return bad("volume is not positive");
  const double eps = 1e-7 * diameter(P);
  for (const Face& f : P.f) {
    const Vec3 a = P.v[f.a];
    const Vec3 fn = cross(P.v[f.b] - a, P.v[f.c] - a);
    const double len = norm(fn);
    if (len == 0.0) continue;
    if (dot(fn, m.centroid - a) / len > eps) return bad("face oriented inward");
  }
  return true;
}

PolytopeScan::PolytopeScan(const ConvexPolytope& body) : body_(&body) {
  if (body.v.empty() || body.f.empty()) fail(errc::empty_body, "scan of an empty body");
  const Box3 b = bbox(body.v);
  shift_ = (b.lo + b.hi) / 2.0;
  diam_ = norm(b.hi - b.lo);
  eps_ = 1e-9 * diam_;

  q_.resize(body.v.size());
  for (std::size_t i = 0; i < body.v.size(); ++i) q_[i] = body.v[i] - shift_;

  fm_.resize(body.f.size());
  double v6 = 0.0;
  for (std::size_t i = 0; i < body.f.size(); ++i) {
    const Face& f = body.f[i];
    const Vec3 a = q_[f.a], bb2 = q_[f.b], c = q_[f.c];
    TetAcc one;
    one.add(a, bb2, c);
    FaceMom& fm = fm_[i];
    fm.vol = one.v6;
    fm.m1 = one.m1;
    fm.xx = one.xx;
    fm.yy = one.yy;
    fm.zz = one.zz;
    fm.xy = one.xy;
    fm.xz = one.xz;
    fm.yz = one.yz;
    v6 += one.v6;
  }
  vol_ = v6 / 6.0;
  if (!(vol_ > 0.0)) fail(errc::degenerate_input, "body has no volume");

  const int64_t stride = static_cast<int64_t>(body.v.size()) + 1;
  std::unordered_set<int64_t> seen;
  for (const Face& f : body.f) {
    const int tri[3] = {f.a, f.b, f.c};
    for (int k = 0; k < 3; ++k) {
      int a = tri[k], b2 = tri[(k + 1) % 3];
      if (a > b2) std::swap(a, b2);
      if (seen.insert(edge_key(a, b2, stride)).second) {
        edges_.push_back({a, b2});
      }
    }
  }
}

PolytopeDirScan::PolytopeDirScan(const PolytopeScan& s, Vec3 u) : s_(&s) {
  u_ = normalized(u);
  const std::vector<Vec3>& v = s.body().v;
  d_.resize(v.size());
  lo_ = kInf;
  hi_ = -kInf;
  for (std::size_t i = 0; i < v.size(); ++i) {
    d_[i] = dot(v[i], u_);
    lo_ = std::min(lo_, d_[i]);
    hi_ = std::max(hi_, d_[i]);
  }
}

PolytopeDirScan::CapEval PolytopeDirScan::cap(double t) const {
  const ConvexPolytope& body = s_->body();
  const std::vector<Vec3>& q = s_->q_;
  const double eps = s_->eps_;

  double v6 = 0.0;
  Vec3 wsum{};            // sum of cross(from, to) over cut-face edges
  Vec3 apex{};            // first cut point, fan origin for the cut face
  bool have_apex = false;
  double apex_v6 = 0.0;   // cut-face fan determinants

  Vec3 emitted[8];
  bool onplane[8];

  for (std::size_t fi = 0; fi < body.f.size(); ++fi) {
    const Face& f = body.f[fi];
    const int tri[3] = {f.a, f.b, f.c};
    const int c0 = classify(d_[tri[0]], t, eps);
    const int c1 = classify(d_[tri[1]], t, eps);
    const int c2 = classify(d_[tri[2]], t, eps);
    if (c0 > 0 && c1 > 0 && c2 > 0) {
      v6 += s_->fm_[fi].vol;
      continue;
    }
    if (c0 < 0 && c1 < 0 && c2 < 0) continue;

    const int cls[3] = {c0, c1, c2};
    int m = 0;
    for (int k = 0; k < 3; ++k) {
      const int i = tri[k], j = tri[(k + 1) % 3];
      const int ci = cls[k], cj = cls[(k + 1) % 3];
      if (ci >= 0) {
        emitted[m] = q[i];
        onplane[m] = (ci == 0);
        ++m;
      }
      if ((ci > 0 && cj < 0) || (ci < 0 && cj > 0)) {
        const double w = (t - d_[i]) / (d_[j] - d_[i]);
        emitted[m] = q[i] + (q[j] - q[i]) * w;
        onplane[m] = true;
        ++m;
      }
    }
    if (m >= 3) {
      for (int k = 1; k + 1 < m; ++k) {
        v6 += dot(emitted[0], cross(emitted[k], emitted[k + 1]));
      }
    }
    for (int k = 0; k < m; ++k) {
      const int k2 = (k + 1) % m;
      if (m >= 2 && onplane[k] && onplane[k2]) {
        const Vec3 from = emitted[k2], to = emitted[k];
        wsum += cross(from, to);
        if (!have_apex) {
          apex = from;
          have_apex = true;
        } else {
          apex_v6 += dot(apex, cross(from, to));
        }
      }
    }
  }
  v6 += apex_v6;

  CapEval e;
  e.vol = std::max(0.0, v6 / 6.0);
  e.slice = std::max(0.0, dot(-u_, wsum) / 2.0);
  return e;
}

Moments3 PolytopeDirScan::cap_moments(double t) const {
  const ConvexPolytope& body = s_->body();
  const std::vector<Vec3>& q = s_->q_;
  const double eps = s_->eps_;

  TetAcc acc;
  std::vector<std::array<Vec3, 2>> cut;
  cut.reserve(64);

  Vec3 emitted[8];
  bool onplane[8];

  for (std::size_t fi = 0; fi < body.f.size(); ++fi) {
    const Face& f = body.f[fi];
    const int tri[3] = {f.a, f.b, f.c};
    const int c0 = classify(d_[tri[0]], t, eps);
    const int c1 = classify(d_[tri[1]], t, eps);
    const int c2 = classify(d_[tri[2]], t, eps);
    if (c0 > 0 && c1 > 0 && c2 > 0) {
      const PolytopeScan::FaceMom& fm = s_->fm_[fi];
      acc.v6 += fm.vol;
      acc.m1 += fm.m1;
      acc.xx += fm.xx;
      acc.yy += fm.yy;
      acc.zz += fm.zz;
      acc.xy += fm.xy;
      acc.xz += fm.xz;
      acc.yz += fm.yz;
      continue;
    }
    if (c0 < 0 && c1 < 0 && c2 < 0) continue;

    const int cls[3] = {c0, c1, c2};
    int m = 0;
    for (int k = 0; k < 3; ++k) {
      const int i = tri[k], j = tri[(k + 1) % 3];
      const int ci = cls[k], cj = cls[(k + 1) % 3];
      if (ci >= 0) {
        emitted[m] = q[i];
        onplane[m] = (ci == 0);
        ++m;
      }
      if ((ci > 0 && cj < 0) || (ci < 0 && cj > 0)) {
        const double w = (t - d_[i]) / (d_[j] - d_[i]);
        emitted[m] = q[i] + (q[j] - q[i]) * w;
        onplane[m] = true;
        ++m;
      }
    }
    if (m >= 3) {
      for (int k = 1; k + 1 < m; ++k) acc.add(emitted[0], emitted[k], emitted[k + 1]);
    }
    for (int k = 0; k < m; ++k) {
      const int k2 = (k + 1) % m;
      if (m >= 2 && onplane[k] && onplane[k2]) {
        cut.push_back({emitted[k2], emitted[k]});
      }
    }
  }
  for (std::size_t k = 1; k < cut.size(); ++k) {
    acc.add(cut[0][0], cut[k][0], cut[k][1]);
  }
  return acc.finish(s_->shift_);
}

Section3 PolytopeDirScan::section(double t) const {
  if (t > hi_ + s_->eps_ || t < lo_ - s_->eps_) {
    fail(errc::empty_section, "cut plane misses the body");
  }
  const ConvexPolytope& body = s_->body();
  const double eps = s_->eps_;
  Vec3 e1, e2;
  tangent_basis(u_, e1, e2);

  std::vector<Vec2> hits;
  for (std::size_t i = 0; i < body.v.size(); ++i) {
    if (classify(d_[i], t, eps) == 0) {
      hits.push_back(Vec2{dot(body.v[i], e1), dot(body.v[i], e2)});
    }
  }
  for (const std::array<int, 2>& e : s_->edges_) {
    const int a = e[0], b = e[1];
    const int ca = classify(d_[a], t, eps);
    const int cb = classify(d_[b], t, eps);
    if ((ca > 0 && cb < 0) || (ca < 0 && cb > 0)) {
      const double w = (t - d_[a]) / (d_[b] - d_[a]);
      const Vec3 x = body.v[a] + (body.v[b] - body.v[a]) * w;
      hits.push_back(Vec2{dot(x, e1), dot(x, e2)});
    }
  }
  if (hits.empty()) fail(errc::empty_section, "cut plane misses the body");

  Section3 sec;
  sec.frame = SectionFrame3{u_ * t, e1, e2, u_};
  try {
    sec.poly = build_polygon(hits);
  } catch (const Error&) {
    std::sort(hits.begin(), hits.end(), [](Vec2 a, Vec2 b) {
      return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    sec.poly.v.push_back(hits.front());
    if (norm(hits.back() - hits.front()) > eps) sec.poly.v.push_back(hits.back());
  }
  return sec;
}

}  // namespace floatlab
