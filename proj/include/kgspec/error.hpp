#pragma once

#include <stdexcept>
#include <string>

namespace kgspec {

/// Failure categories shared by every module. The numeric values are the
/// status codes returned through the C API (see kgspec.h).
enum class ErrorCode : int {
  domain = 1,           // argument outside the function's domain (r <= 0, ...)
  pole = 2,             // gamma at a non-positive integer
  parameter = 3,        // vanishing Pochhammer denominator, bad model parameter
  complex_branch = 4,   // c8 < 0 or c9 < 0 in the NU recipe
  window = 5,           // |E| >= M c^2
  s_wave_only = 6,      // Rosen-Morse family with l > 0 or D != 3
  unsupported = 7,      // operation not defined for this model / mode
  non_normalizable = 8, // state does not decay at a boundary
  no_sign_change = 9,   // shooting bracket without an eigenvalue
  invalid_argument = 10,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace kgspec
