#pragma once

#include <string>

namespace altpresence {

// Fixed-point decimal with half-away-from-zero rounding, rendered without
// going through locale-dependent printf. Reports pin their display precision
// with this helper so identical inputs always emit identical bytes.
std::string fixed(double value, int decimals);

// The value `fixed` would print, as a double (used by table cross-checks).
double display_round(double value, int decimals);

}  // namespace altpresence
