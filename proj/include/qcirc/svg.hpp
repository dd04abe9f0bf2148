#pragma once

#include <string>

#include "qcirc/shapes.hpp"
#include "qcirc/style.hpp"

namespace qcirc {

struct SvgOptions {
    double scale = 1.0;       // multiplies the em -> user-unit factor
    bool fit_labels = false;  // grow the canvas to cover text overflow
};

/// Emits SVG 1.1. The canvas is the circuit bounding box (text included only
/// under fit_labels) plus the style margin; shapes are written in ascending
/// layer then insertion order; every number is fixed 3-decimal, so equal
/// shape lists produce byte-identical documents.
std::string emit_svg(const ShapeList &shapes, const StyleTable &style, const SvgOptions &options = {});

}  // namespace qcirc
