#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floatlab/polygon.hpp"
#include "floatlab/polytope.hpp"

namespace floatlab {

// shortest round-trip decimal form (std::to_chars); locale independent
std::string format_double(double v);

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ULL);

// stable content hash of a body, hex encoded
std::string body_digest(const ConvexPolygon& P);
std::string body_digest(const ConvexPolytope& P);

// Minimal deterministic JSON emitter; keys appear in insertion order and
// numbers use format_double, so equal inputs give byte-identical output.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(int v) { return value(static_cast<long long>(v)); }
  JsonWriter& value(long long v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& s);
  JsonWriter& value(const char* s) { return value(std::string(s)); }
  JsonWriter& null();
  const std::string& str() const { return out_; }

 private:
  void separate();
  std::string out_;
  std::vector<bool> first_;  // per open container: no element written yet
  bool pending_key_ = false;
};

std::string json_escape(const std::string& s);

// one CSV line from already formatted cells
std::string csv_line(const std::vector<std::string>& cells);

}  // namespace floatlab
