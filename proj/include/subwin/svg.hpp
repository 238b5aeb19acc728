// svg.hpp -- static single-file SVG line chart for location curves.
#pragma once

#include <string>

#include "subwin/profile.hpp"

namespace subwin {

// Rate (SWs per 100 windows) against relative fulltext position.
// Absent bins break the polyline.
std::string curve_svg(const LocationCurve& curve, const std::string& title);

}  // namespace subwin
