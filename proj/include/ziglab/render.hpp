#pragma once

// Deterministic figure emitters.  All geometry is computed in exact rational
// arithmetic and converted to integers only at the last moment (SVG user
// units on a fixed 0 0 1000 1000 viewBox, fixed-precision decimals for the
// mesh), so repeated runs are byte-identical.

#include <iosfwd>
#include <string>

#include "ziglab/rational.hpp"

namespace ziglab {

enum class RenderKind { Topview, Vertices, Lines, Transformed, Tree, Mesh };

struct RenderSpec {
    RenderKind kind;
    long long den_cutoff = 30;  // for Tree this is the subdivision depth
    long long size_px = 1000;
};

void render(const RenderSpec& spec, std::ostream& os);

// Exact decimal expansion of r rounded half-up to `digits` fractional digits.
std::string decimal_string(const Rational& r, int digits);

// Nearest integer to 1000 * r, used for viewBox coordinates.
long long svg_coord(const Rational& r);

} // namespace ziglab
