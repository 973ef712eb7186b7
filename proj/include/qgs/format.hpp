#pragma once

#include <string>

namespace qgs {

// Shortest %g rendering at 12 significant digits; regression-diff friendly.
std::string format_g12(double value);

} // namespace qgs
