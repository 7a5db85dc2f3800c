#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace floatlab {

// Every failure the library raises carries a stable machine-readable code
// (used verbatim in CLI error output) plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

namespace errc {
inline constexpr const char* degenerate_input = "DegenerateInput";
inline constexpr const char* empty_body = "EmptyBody";
inline constexpr const char* empty_section = "EmptySection";
inline constexpr const char* invalid_delta = "InvalidDelta";
inline constexpr const char* inside_disk = "InsideDisk";
inline constexpr const char* too_few_samples = "TooFewSamples";
inline constexpr const char* asymmetric_body = "AsymmetricBody";
inline constexpr const char* empty_floating_body = "EmptyFloatingBody";
inline constexpr const char* parse_error = "ParseError";
}  // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace floatlab
