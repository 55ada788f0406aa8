#pragma once

// SVG rendering of a point set and an optional matching: points as dots,
// matched pairs as segments, representatives as outlined shapes.  The y-axis
// is flipped so figures read in mathematical orientation.

#include <string>
#include <vector>

#include "strongmatch/matching.hpp"

namespace strongmatch {

std::string render_svg(const std::vector<Point>& pts, const StrongMatching<double>* matching);

}  // namespace strongmatch
