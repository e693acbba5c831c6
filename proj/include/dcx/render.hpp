#pragma once

#include <string>

#include "dcx/bicomplex.hpp"
#include "dcx/zigzags.hpp"

namespace dcx {

/// Grid of dimensions (p to the right, q up) followed by one line per shape with its points and count.
std::string render_ascii(const DoubleComplex& a, const MultiplicityVector& m);
/// Same, with the dimensions taken from the shapes.
std::string render_ascii(const MultiplicityVector& m);

/// Standalone SVG: one node per point of every copy of every shape, arrows along d1 (right) and d2 (up).
std::string render_svg(const MultiplicityVector& m);

}  // namespace dcx
