#pragma once

// Published s-wave spectra of the Rosen-Morse well, used as a regression
// target. Missing entries are NaN.

#include <array>

namespace kgspec {

struct ReferenceBlock {
  double alpha, q, v1, v2, mass;
  std::array<std::array<double, 4>, 5> energies; // rows n = 1..5
};

const std::array<ReferenceBlock, 4>& reference_blocks() noexcept;

} // namespace kgspec
