#pragma once

#include "trapmeasure/gasket.hpp"
#include "trapmeasure/trapezoid.hpp"

#include <string>

namespace trapmeasure {

/// SVG 1.1 drawing on a 1000x1000 canvas. Coordinates are written in the unit
/// square scaled by 1000 and flipped by a group transform so that height 0 is
/// the bottom edge. One half-transparent polygon per parallelogram, in
/// ascending j.
[[nodiscard]] std::string render_trapezoid_svg(const TrapezoidSpec& spec);

/// One triangle per generation-n cell of the partial gasket.
[[nodiscard]] std::string render_gasket_svg(const GasketSpec& spec);

}  // namespace trapmeasure
