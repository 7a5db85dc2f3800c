#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "floatlab/polygon.hpp"
#include "floatlab/polytope.hpp"

namespace floatlab {

// JSON schema v1. Per-kind parameters; center/rotation apply after building.
struct BodySpec {
  std::string kind;
  int dim = 0;  // required for simplex and random_hull (2 or 3)
  std::vector<Vec2> vertices2;
  std::vector<Vec3> vertices3;
  std::vector<double> semi_axes;
  double radius = 1.0;
  double side = 2.0;
  int count = 0;
  std::uint64_t seed = 1;
  int resolution = 0;  // 0 -> kind default (4096 in 2D, 2048 in 3D)
  std::vector<double> center;
  bool has_rotation = false;
  double rotation_angle = 0.0;
  Vec3 rotation_axis{0.0, 0.0, 1.0};
};

using Body = std::variant<ConvexPolygon, ConvexPolytope>;

BodySpec parse_body_spec(const std::string& json_text);
BodySpec load_body_spec(const std::string& path);
Body realize(const BodySpec& spec);

inline int body_dim(const Body& b) {
  return std::holds_alternative<ConvexPolygon>(b) ? 2 : 3;
}

std::string body_digest(const Body& b);

}  // namespace floatlab
