#include "floatlab/bodyspec.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "floatlab/bodies.hpp"
#include "floatlab/errors.hpp"
#include "floatlab/report.hpp"

namespace floatlab {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  fail(errc::parse_error, "field '" + field + "': " + why);
}

double number_at(const json& j, const std::string& field) {
  if (!j.at(field).is_number()) bad_field(field, "expected a number");
  return j.at(field).get<double>();
}

int int_at(const json& j, const std::string& field) {
  if (!j.at(field).is_number_integer()) bad_field(field, "expected an integer");
  return j.at(field).get<int>();
}

std::vector<double> tuple_at(const json& j, const std::string& field,
                             std::size_t lo, std::size_t hi) {
  const json& a = j.at(field);
  if (!a.is_array() || a.size() < lo || a.size() > hi) {
    bad_field(field, "expected an array of " + std::to_string(lo) +
                         (lo == hi ? "" : ".." + std::to_string(hi)) + " numbers");
  }
  std::vector<double> out;
  for (const auto& x : a) {
    if (!x.is_number()) bad_field(field, "expected numeric entries");
    out.push_back(x.get<double>());
  }
  return out;
}

int default_resolution(int dim) { return dim == 2 ? 4096 : 2048; }

}  // namespace

BodySpec parse_body_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(errc::parse_error, "top level must be an object");
  BodySpec spec;
  try {
    if (!j.contains("kind") || !j.at("kind").is_string()) {
      bad_field("kind", "required string");
    }
    spec.kind = j.at("kind").get<std::string>();
    if (j.contains("dim")) spec.dim = int_at(j, "dim");
    if (j.contains("radius")) spec.radius = number_at(j, "radius");
    if (j.contains("side")) spec.side = number_at(j, "side");
    if (j.contains("count")) spec.count = int_at(j, "count");
    if (j.contains("seed")) spec.seed = static_cast<std::uint64_t>(j.at("seed").get<std::uint64_t>());
    if (j.contains("resolution")) spec.resolution = int_at(j, "resolution");
    if (j.contains("semi_axes")) spec.semi_axes = tuple_at(j, "semi_axes", 2, 3);
    else if (j.contains("semi-axes")) spec.semi_axes = tuple_at(j, "semi-axes", 2, 3);
    if (j.contains("center")) spec.center = tuple_at(j, "center", 2, 3);
    if (j.contains("vertices")) {
      const json& verts = j.at("vertices");
      if (!verts.is_array() || verts.empty()) bad_field("vertices", "expected a non-empty array");
      const std::size_t width = verts.front().is_array() ? verts.front().size() : 0;
      if (width != 2 && width != 3) bad_field("vertices", "entries must be [x,y] or [x,y,z]");
      for (const auto& row : verts) {
        if (!row.is_array() || row.size() != width) bad_field("vertices", "ragged entries");
        for (const auto& x : row) {
          if (!x.is_number()) bad_field("vertices", "expected numeric coordinates");
        }
        if (width == 2) {
          spec.vertices2.push_back({row[0].get<double>(), row[1].get<double>()});
        } else {
          spec.vertices3.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
        }
      }
    }
    if (j.contains("rotation")) {
      const json& rot = j.at("rotation");
      spec.has_rotation = true;
      if (rot.is_number()) {
        spec.rotation_angle = rot.get<double>();
      } else if (rot.is_object() && rot.contains("angle")) {
        spec.rotation_angle = number_at(rot, "angle");
        if (rot.contains("axis")) {
          const std::vector<double> ax = tuple_at(rot, "axis", 3, 3);
          spec.rotation_axis = {ax[0], ax[1], ax[2]};
        }
      } else {
        bad_field("rotation", "expected an angle or {axis, angle}");
      }
    }
  } catch (const json::exception& e) {
    fail(errc::parse_error, std::string("invalid spec: ") + e.what());
  }
  return spec;
}

BodySpec load_body_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open body spec '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_body_spec(buf.str());
}

Body realize(const BodySpec& spec) {
  Body body;
  const std::string& k = spec.kind;
  auto res2 = spec.resolution > 0 ? spec.resolution : default_resolution(2);
  auto res3 = spec.resolution > 0 ? spec.resolution : default_resolution(3);
  if (k == "polygon") {
    if (spec.vertices2.empty()) bad_field("vertices", "polygon needs 2D vertices");
    body = build_polygon(spec.vertices2);
  } else if (k == "polytope") {
    if (spec.vertices3.empty()) bad_field("vertices", "polytope needs 3D vertices");
    body = build_polytope(spec.vertices3);
  } else if (k == "disk") {
    body = make_disk(spec.radius, res2);
  } else if (k == "ellipse") {
    if (spec.semi_axes.size() != 2) bad_field("semi_axes", "ellipse needs two semi-axes");
    body = make_ellipse(spec.semi_axes[0], spec.semi_axes[1], res2);
  } else if (k == "ball") {
    body = make_ball(spec.radius, res3);
  } else if (k == "ellipsoid") {
    if (spec.semi_axes.size() != 3) bad_field("semi_axes", "ellipsoid needs three semi-axes");
    body = make_ellipsoid(spec.semi_axes[0], spec.semi_axes[1], spec.semi_axes[2], res3);
  } else if (k == "regular_polygon") {
    if (spec.count < 3) bad_field("count", "regular_polygon needs count >= 3");
    body = make_regular_polygon(spec.count, spec.radius);
  } else if (k == "cube") {
    body = make_cube(spec.side);
  } else if (k == "simplex") {
    if (spec.dim == 2) body = make_simplex2(spec.side);
    else if (spec.dim == 3) body = make_simplex3(spec.side);
    else bad_field("dim", "simplex needs dim 2 or 3");
  } else if (k == "random_hull") {
    if (spec.dim == 2) body = random_hull2(spec.count, spec.seed);
    else if (spec.dim == 3) body = random_hull3(spec.count, spec.seed);
    else bad_field("dim", "random_hull needs dim 2 or 3");
  } else {
    bad_field("kind", "unknown kind '" + k + "'");
  }
  if (spec.has_rotation) {
    if (std::holds_alternative<ConvexPolygon>(body)) {
      body = rotated(std::get<ConvexPolygon>(body), spec.rotation_angle);
    } else {
      body = rotated(std::get<ConvexPolytope>(body), spec.rotation_axis, spec.rotation_angle);
    }
  }
  if (!spec.center.empty()) {
    if (std::holds_alternative<ConvexPolygon>(body)) {
      if (spec.center.size() != 2) bad_field("center", "expected two coordinates");
      body = translated(std::get<ConvexPolygon>(body), {spec.center[0], spec.center[1]});
    } else {
      if (spec.center.size() != 3) bad_field("center", "expected three coordinates");
      body = translated(std::get<ConvexPolytope>(body),
                        {spec.center[0], spec.center[1], spec.center[2]});
    }
  }
  return body;
}

std::string body_digest(const Body& b) {
  if (std::holds_alternative<ConvexPolygon>(b)) return body_digest(std::get<ConvexPolygon>(b));
  return body_digest(std::get<ConvexPolytope>(b));
}

}  // namespace floatlab
