#pragma once

#include "jacang/asymptotics.hpp"

#include <string>
#include <vector>

namespace jacang::cli {

// Standalone SVG: axes, one polyline per curve (clipped to [0, ymax]) and a
// legend. Curves are drawn solid, dash, dash-dot, long dash, dots in order.
std::string density_svg(const std::vector<DensityCurve>& curves, double ymax);

}  // namespace jacang::cli
