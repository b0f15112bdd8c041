#pragma once

#include <stdexcept>
#include <string>

namespace gammahat {

enum class Errc {
  invalid_argument,
  parse_error,
  guard_exceeded,
  dimension_mismatch,
  non_unit_constant,
  nonzero_constant,
  precision_unachievable,
  zero_scale,
  not_representable,
};

// Single exception type for the library; the code distinguishes the
// failure class so the C layer can map it to a status value.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gammahat
