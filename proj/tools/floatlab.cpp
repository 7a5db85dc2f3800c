#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "floatlab/bodies.hpp"
#include "floatlab/bodyspec.hpp"
#include "floatlab/chordchain.hpp"
#include "floatlab/errors.hpp"
#include "floatlab/floating.hpp"
#include "floatlab/metronoid.hpp"
#include "floatlab/radon.hpp"
#include "floatlab/report.hpp"

namespace {

using namespace floatlab;

constexpr double kTau = 2.0 * std::numbers::pi;

struct Options {
  std::string body_path;
  double delta = 0.25;
  int directions = 0;  // 0 -> 1024 (2D) / 2048 (3D)
  int tangents = 16;
  int resolution = 0;  // 0 -> body-spec value
  int quadrature = 512;
  double tol_volume = 1e-12;
  double tol_delta = 1e-4;
  double threshold = -1.0;  // <0 -> per-command default
  std::uint64_t seed = 0;
  bool seed_set = false;
  double radius = 0.5;
  int steps = 500;
  int orientation = 1;
  double start_angle = 0.0;
  std::string format = "json";
  std::string out_path;
  bool assert_verdict = false;
};

struct Table {
  std::vector<std::string> cols;
  std::vector<std::vector<double>> rows;
};

struct Summary {
  double min = 0.0, max = 0.0, mean = 0.0, spread = 0.0;
  std::optional<double> r_estimate;
  std::optional<std::string> verdict;
};

Summary stats_of(const std::vector<double>& xs) {
  Summary s;
  if (xs.empty()) return s;
  s.min = *std::min_element(xs.begin(), xs.end());
  s.max = *std::max_element(xs.begin(), xs.end());
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  s.spread = s.mean != 0.0 ? (s.max - s.min) / s.mean : 0.0;
  return s;
}

void emit_config(JsonWriter& w, const Options& o) {
  w.begin_object();
  w.key("body").value(o.body_path);
  w.key("delta").value(o.delta);
  w.key("directions").value(o.directions);
  w.key("tangents").value(o.tangents);
  w.key("resolution").value(o.resolution);
  w.key("quadrature").value(o.quadrature);
  w.key("tol_volume").value(o.tol_volume);
  w.key("tol_delta").value(o.tol_delta);
  w.key("threshold").value(o.threshold);
  if (o.seed_set) w.key("seed").value(o.seed); else w.key("seed").null();
  w.key("radius").value(o.radius);
  w.key("steps").value(o.steps);
  w.key("orientation").value(o.orientation);
  w.key("start_angle").value(o.start_angle);
  w.key("format").value(o.format);
  w.end_object();
}

std::string render_json(const std::string& command, const Options& o,
                        const std::string& digest, const Table& t, const Summary& s) {
  JsonWriter w;
  w.begin_object();
  w.key("command").value(command);
  w.key("config");
  emit_config(w, o);
  w.key("body_digest").value(digest);
  w.key("samples").begin_array();
  for (const auto& row : t.rows) {
    w.begin_object();
    for (std::size_t c = 0; c < t.cols.size(); ++c) w.key(t.cols[c]).value(row[c]);
    w.end_object();
  }
  w.end_array();
  w.key("summary").begin_object();
  w.key("min").value(s.min);
  w.key("max").value(s.max);
  w.key("mean").value(s.mean);
  w.key("spread").value(s.spread);
  if (s.r_estimate) w.key("R_estimate").value(*s.r_estimate); else w.key("R_estimate").null();
  if (s.verdict) w.key("verdict").value(*s.verdict); else w.key("verdict").null();
  w.end_object();
  w.end_object();
  return w.str() + "\n";
}

std::string render_csv(const Table& t) {
  std::string out = csv_line(t.cols);
  std::vector<std::string> cells(t.cols.size());
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) cells[c] = format_double(row[c]);
    out += csv_line(cells);
  }
  return out;
}

void write_output(const Options& o, const std::string& text) {
  if (o.out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) fail(errc::parse_error, "cannot open output file '" + o.out_path + "'");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

int finish(const std::string& command, const Options& o, const std::string& digest,
           const Table& t, const Summary& s, bool verdict_negative = false) {
  const std::string text = o.format == "csv" ? render_csv(t)
                                             : render_json(command, o, digest, t, s);
  write_output(o, text);
  return (o.assert_verdict && verdict_negative) ? 2 : 0;
}

std::vector<Vec2> dirs2(const Options& o) {
  return uniform_directions2(o.directions > 0 ? o.directions : 1024);
}

std::vector<Vec3> dirs3(const Options& o) {
  return fibonacci_sphere(o.directions > 0 ? o.directions : 2048);
}

const ConvexPolygon& as2(const Body& b, const char* cmd) {
  if (!std::holds_alternative<ConvexPolygon>(b)) {
    fail(errc::degenerate_input, std::string(cmd) + " requires a 2D body");
  }
  return std::get<ConvexPolygon>(b);
}

const ConvexPolytope& as3(const Body& b, const char* cmd) {
  if (!std::holds_alternative<ConvexPolytope>(b)) {
    fail(errc::degenerate_input, std::string(cmd) + " requires a 3D body");
  }
  return std::get<ConvexPolytope>(b);
}

Body load_body(Options& o) {
  BodySpec spec = load_body_spec(o.body_path);
  if (o.resolution > 0) spec.resolution = o.resolution;
  if (o.seed_set) spec.seed = o.seed;
  return realize(spec);
}

int run_cut(Options& o) {
  const Body body = load_body(o);
  Table t;
  std::vector<double> ts;
  if (body_dim(body) == 2) {
    const auto& K = as2(body, "cut");
    t.cols = {"u1", "u2", "t"};
    for (const Vec2& u : dirs2(o)) {
      const double tt = cut_offset(K, u, o.delta, o.tol_volume);
      t.rows.push_back({u.x, u.y, tt});
      ts.push_back(tt);
    }
  } else {
    const auto& K = as3(body, "cut");
    const PolytopeScan scan(K);
    t.cols = {"u1", "u2", "u3", "t"};
    for (const Vec3& u : dirs3(o)) {
      const double tt = cut_offset_scan(PolytopeDirScan(scan, u), o.delta, o.tol_volume);
      t.rows.push_back({u.x, u.y, u.z, tt});
      ts.push_back(tt);
    }
  }
  return finish("cut", o, body_digest(body), t, stats_of(ts));
}

int run_cap(Options& o) {
  const Body body = load_body(o);
  Table t;
  std::vector<double> radii;
  if (body_dim(body) == 2) {
    const auto& K = as2(body, "cap");
    t.cols = {"u1", "u2", "t", "X1", "X2", "measure"};
    for (const Vec2& u : dirs2(o)) {
      const CutRecord2 rec = cap_record(K, u, o.delta, o.tol_volume);
      t.rows.push_back({u.x, u.y, rec.offset, rec.cap_centroid.x, rec.cap_centroid.y,
                        rec.cap.measure});
      radii.push_back(norm(rec.cap_centroid));
    }
  } else {
    const auto& K = as3(body, "cap");
    const PolytopeScan scan(K);
    t.cols = {"u1", "u2", "u3", "t", "X1", "X2", "X3", "measure"};
    for (const Vec3& u : dirs3(o)) {
      const CutRecord3 rec = cap_record_scan(PolytopeDirScan(scan, u), o.delta, o.tol_volume);
      t.rows.push_back({u.x, u.y, u.z, rec.offset, rec.cap_centroid.x, rec.cap_centroid.y,
                        rec.cap_centroid.z, rec.cap.measure});
      radii.push_back(norm(rec.cap_centroid));
    }
  }
  return finish("cap", o, body_digest(body), t, stats_of(radii));
}

int run_floating(Options& o) {
  const Body body = load_body(o);
  Table t;
  std::vector<double> ts;
  std::string kind;
  if (body_dim(body) == 2) {
    const auto& K = as2(body, "floating-body");
    const FloatingBody2 fb = floating_body(K, o.delta, dirs2(o), o.tol_volume);
    t.cols = {"u1", "u2", "t"};
    for (std::size_t i = 0; i < fb.directions.size(); ++i) {
      t.rows.push_back({fb.directions[i].x, fb.directions[i].y, fb.offsets[i]});
      ts.push_back(fb.offsets[i]);
    }
    kind = fb.kind == BodyClass::Body ? "body" : fb.kind == BodyClass::Point ? "point" : "empty";
  } else {
    const auto& K = as3(body, "floating-body");
    const FloatingBody3 fb = floating_body(K, o.delta, dirs3(o), o.tol_volume);
    t.cols = {"u1", "u2", "u3", "t"};
    for (std::size_t i = 0; i < fb.directions.size(); ++i) {
      t.rows.push_back({fb.directions[i].x, fb.directions[i].y, fb.directions[i].z,
                        fb.offsets[i]});
      ts.push_back(fb.offsets[i]);
    }
    kind = fb.kind == BodyClass::Body ? "body" : fb.kind == BodyClass::Point ? "point" : "empty";
  }
  Summary s = stats_of(ts);
  s.verdict = kind;
  return finish("floating-body", o, body_digest(body), t, s, kind == "empty");
}

int run_critical(Options& o) {
  const Body body = load_body(o);
  double dc = 0.0;
  if (body_dim(body) == 2) {
    dc = critical_delta(as2(body, "critical-delta"), dirs2(o), o.tol_delta);
  } else {
    dc = critical_delta(as3(body, "critical-delta"), dirs3(o), o.tol_delta);
  }
  Table t;
  t.cols = {"delta_c"};
  t.rows.push_back({dc});
  Summary s = stats_of({dc});
  return finish("critical-delta", o, body_digest(body), t, s);
}

int run_dupin(Options& o) {
  const Body body = load_body(o);
  const double threshold = o.threshold >= 0.0 ? o.threshold : 1e-3;
  Table t;
  std::vector<double> res;
  if (body_dim(body) == 2) {
    const auto& K = as2(body, "dupin");
    const std::vector<Vec2> dirs = dirs2(o);
    res = dupin_tangency_residuals(K, o.delta, dirs, o.tol_volume);
    t.cols = {"u1", "u2", "residual"};
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      t.rows.push_back({dirs[i].x, dirs[i].y, res[i]});
    }
  } else {
    const auto& K = as3(body, "dupin");
    const std::vector<Vec3> dirs = dirs3(o);
    res = dupin_tangency_residuals(K, o.delta, dirs, o.tol_volume);
    t.cols = {"u1", "u2", "u3", "residual"};
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      t.rows.push_back({dirs[i].x, dirs[i].y, dirs[i].z, res[i]});
    }
  }
  Summary s = stats_of(res);
  const bool ok = s.max < threshold;
  s.verdict = ok ? "consistent" : "inconsistent";
  return finish("dupin", o, body_digest(body), t, s, !ok);
}

int run_metronoid(Options& o) {
  const Body body = load_body(o);
  Table t;
  std::vector<double> radii;
  if (body_dim(body) == 2) {
    const auto& K = as2(body, "metronoid");
    const int m = o.directions > 0 ? o.directions : 1024;
    const auto samples = metronoid_boundary(K, o.delta, uniform_directions2(m), o.tol_volume);
    t.cols = {"phi", "u1", "u2", "X1", "X2"};
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const double phi = kTau * static_cast<double>(i) / static_cast<double>(m);
      t.rows.push_back({phi, samples[i].u.x, samples[i].u.y, samples[i].point.x,
                        samples[i].point.y});
      radii.push_back(norm(samples[i].point));
    }
  } else {
    const auto& K = as3(body, "metronoid");
    const auto samples = metronoid_boundary(K, o.delta, dirs3(o), o.tol_volume);
    t.cols = {"u1", "u2", "u3", "X1", "X2", "X3"};
    for (const auto& s : samples) {
      t.rows.push_back({s.u.x, s.u.y, s.u.z, s.point.x, s.point.y, s.point.z});
      radii.push_back(norm(s.point));
    }
  }
  return finish("metronoid", o, body_digest(body), t, stats_of(radii));
}

int run_curvature(Options& o) {
  const Body body = load_body(o);
  const auto& K = as2(body, "curvature");
  const int m = o.directions > 0 ? o.directions : 1024;
  Table t;
  t.cols = {"phi", "radius"};
  std::vector<double> rs;
  for (int i = 0; i < m; ++i) {
    const double phi = kTau * static_cast<double>(i) / static_cast<double>(m);
    const double r = curvature_radius_2d(K, o.delta, phi, o.tol_volume);
    t.rows.push_back({phi, r});
    rs.push_back(r);
  }
  return finish("curvature", o, body_digest(body), t, stats_of(rs));
}

int run_ulam(Options& o) {
  const Body body = load_body(o);
  const double threshold = o.threshold >= 0.0 ? o.threshold : 1e-2;
  Table t;
  Summary s;
  bool negative = false;
  if (body_dim(body) == 2) {
    const auto& K = as2(body, "ulam-test");
    const UlamReport2 rep = ulam_report(K, o.delta, dirs2(o), 1, threshold, o.tol_volume);
    t.cols = {"u1", "u2", "v1", "v2", "value"};
    for (const auto& smp : rep.samples) {
      t.rows.push_back({smp.u.x, smp.u.y, smp.v.x, smp.v.y, smp.value});
    }
    s = {rep.stats.min, rep.stats.max, rep.stats.mean, rep.stats.spread,
         rep.stats.r_estimate, rep.stats.consistent ? "consistent" : "inconsistent"};
    negative = !rep.stats.consistent;
  } else {
    const auto& K = as3(body, "ulam-test");
    const UlamReport3 rep = ulam_report(K, o.delta, dirs3(o), o.tangents, threshold, o.tol_volume);
    t.cols = {"u1", "u2", "u3", "v1", "v2", "v3", "value"};
    for (const auto& smp : rep.samples) {
      t.rows.push_back({smp.u.x, smp.u.y, smp.u.z, smp.v.x, smp.v.y, smp.v.z, smp.value});
    }
    s = {rep.stats.min, rep.stats.max, rep.stats.mean, rep.stats.spread,
         rep.stats.r_estimate, rep.stats.consistent ? "consistent" : "inconsistent"};
    negative = !rep.stats.consistent;
  }
  return finish("ulam-test", o, body_digest(body), t, s, negative);
}

int run_radon(Options& o) {
  const Body body = load_body(o);
  const auto& K = as3(body, "radon");
  Table t;
  t.cols = {"u1", "u2", "u3", "value"};
  std::vector<double> vals;
  for (const Vec3& u : dirs3(o)) {
    const double v = radial_radon_pow4(K, u, o.quadrature);
    t.rows.push_back({u.x, u.y, u.z, v});
    vals.push_back(v);
  }
  return finish("radon", o, body_digest(body), t, stats_of(vals));
}

int run_theorem2(Options& o) {
  const Body body = load_body(o);
  const auto& K = as3(body, "theorem2");
  const double threshold = o.threshold >= 0.0 ? o.threshold : 5e-2;
  const Theorem2Report rep =
      theorem2_report(K, dirs3(o), o.tangents, threshold, o.quadrature);
  Table t;
  t.cols = {"u1", "u2", "u3", "v1", "v2", "v3", "value", "c_mean", "radon_r4",
            "identity_gap"};
  for (const auto& row : rep.rows) {
    t.rows.push_back({row.u.x, row.u.y, row.u.z, row.v.x, row.v.y, row.v.z, row.value,
                      row.c_mean, row.radon_r4, row.identity_gap});
  }
  Summary s;
  s.min = rep.min;
  s.max = rep.max;
  s.mean = rep.mean;
  s.spread = rep.spread;
  s.verdict = rep.is_ball ? "ball" : "not-ball";
  return finish("theorem2", o, body_digest(body), t, s, !rep.is_ball);
}

int run_chain(Options& o) {
  const Body body = load_body(o);
  const auto& K = as2(body, "chord-chain");
  const Vec2 p0 = boundary_point(K, o.start_angle);
  const ChainState st = chain_run(K, o.radius, p0, o.steps, o.orientation);
  Table t;
  t.cols = {"index", "p1", "p2", "radius", "defect"};
  std::vector<double> radii;
  for (std::size_t i = 0; i < st.points.size(); ++i) {
    const double defect = boundary_distance(K, st.points[i]);
    t.rows.push_back({static_cast<double>(i), st.points[i].x, st.points[i].y,
                      st.radii[i], defect});
    radii.push_back(st.radii[i]);
  }
  return finish("chord-chain", o, body_digest(body), t, stats_of(radii));
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--body", o.body_path, "body spec file (JSON)")->required();
  cmd->add_option("--delta", o.delta, "cap volume fraction in (0, 1/2]");
  cmd->add_option("--directions", o.directions, "direction count (default 1024 2D / 2048 3D)");
  cmd->add_option("--tangents", o.tangents, "tangent directions per u (3D)");
  cmd->add_option("--resolution", o.resolution, "override body-spec resolution");
  cmd->add_option("--quadrature", o.quadrature, "great-circle quadrature points");
  cmd->add_option("--tol-volume", o.tol_volume, "relative cap volume tolerance");
  cmd->add_option("--tol-delta", o.tol_delta, "critical-delta bisection tolerance");
  cmd->add_option("--threshold", o.threshold, "verdict threshold (per-command default)");
  cmd->add_option("--seed", o.seed, "override body-spec seed")->each([&o](const std::string&) {
    o.seed_set = true;
  });
  cmd->add_option("--radius", o.radius, "chord-chain disk radius");
  cmd->add_option("--steps", o.steps, "chord-chain step count");
  cmd->add_option("--orientation", o.orientation, "chord-chain orientation (+1/-1)");
  cmd->add_option("--start-angle", o.start_angle, "chord-chain start angle");
  cmd->add_option("--format", o.format, "output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out_path, "output file (default stdout)");
  cmd->add_flag("--assert", o.assert_verdict, "exit 2 on a negative verdict");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"floating bodies, metronoids, and section-moment diagnostics"};
  app.require_subcommand(1);
  Options o;

  struct Cmd {
    const char* name;
    const char* help;
    int (*run)(Options&);
  };
  const std::vector<Cmd> cmds = {
      {"cut", "per-direction cut offsets t(u, delta)", run_cut},
      {"cap", "per-direction cap centroids and measures", run_cap},
      {"floating-body", "floating body via halfspace intersection", run_floating},
      {"critical-delta", "largest delta with a non-empty floating body", run_critical},
      {"dupin", "tangency residuals of the floating body", run_dupin},
      {"metronoid", "metronoid boundary points X(u)", run_metronoid},
      {"curvature", "metronoid curvature radius over angles (2D)", run_curvature},
      {"ulam-test", "isotropy of section moments across directions", run_ulam},
      {"radon", "great-circle averages of the fourth-power radial function", run_radon},
      {"theorem2", "section-moment isotropy with the great-circle cross-check", run_theorem2},
      {"chord-chain", "tangent-chord billiard around an inner disk", run_chain},
  };
  std::vector<std::pair<CLI::App*, int (*)(Options&)>> registered;
  for (const Cmd& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o);
    if (std::string(c.name) == "theorem2") {
      sub->add_flag("--assert-ball", o.assert_verdict, "exit 2 unless the verdict is ball");
    }
    registered.emplace_back(sub, c.run);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto& [sub, run] : registered) {
      if (sub->parsed()) return run(o);
    }
  } catch (const Error& e) {
    JsonWriter w;
    w.begin_object().key("error").begin_object();
    w.key("code").value(e.code());
    w.key("message").value(std::string(e.what()));
    w.end_object().end_object();
    std::cerr << w.str() << "\n";
    return 1;
  } catch (const std::exception& e) {
    JsonWriter w;
    w.begin_object().key("error").begin_object();
    w.key("code").value("Internal");
    w.key("message").value(std::string(e.what()));
    w.end_object().end_object();
    std::cerr << w.str() << "\n";
    return 1;
  }
  return 1;
}
