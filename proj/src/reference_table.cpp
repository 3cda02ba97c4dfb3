#include "kgspec/reference_table.hpp"

#include <limits>

namespace kgspec {

namespace {
constexpr double kNone = std::numeric_limits<double>::quiet_NaN();
}

const std::array<ReferenceBlock, 4>& reference_blocks() noexcept {
  static const std::array<ReferenceBlock, 4> blocks{{
      {1.0, 1.0, 1.0, -1.0, 4.0,
       {{{1.8137, -1.9140, -3.3923, -3.9088},
         {-2.2117, -3.6791, kNone, kNone},
         {-0.6606, -3.3105, kNone, kNone},
         {0.8879, -2.7697, kNone, kNone},
         {1.8766, -1.9765, kNone, kNone}}}},
      {1.0, 1.0, 2.0, -2.0, 5.0,
       {{{0.9989, -3.7763, -4.7275, -4.9351},
         {-4.1746, -4.7795, kNone, kNone},
         {-3.3814, -4.5376, kNone, kNone},
         {-2.3989, -4.2008, kNone, kNone},
         {-1.3083, -3.7529, kNone, kNone}}}},
      {0.5, 1.0, 1.0, -1.0, 4.0,
       {{{1.9558, -3.5288, -3.8460, -3.9773},
         {1.9608, -2.5367, -3.5326, -3.9216},
         {1.2294, -0.5126, -3.0732, -3.8358},
         {-2.4823, -3.7191, kNone, kNone},
         {-1.7822, -3.5695, kNone, kNone}}}},
      {1.0, 0.5, 1.0, -1.0, 4.0,
       {{{1.5783, -3.2245, -3.6502, -3.9258},
         {1.9995, -1.5367, -2.9520, -3.7496},
         {-1.9529, -3.4736, kNone, kNone},
         {-0.7335, -3.0839, kNone, kNone},
         {0.5489, -2.5528, kNone, kNone}}}},
  }};
  return blocks;
}

} // namespace kgspec
