#pragma once

#include "qcirc/element.hpp"
#include "qcirc/geometry.hpp"
#include "qcirc/layout.hpp"
#include "qcirc/shapes.hpp"

namespace qcirc {

struct RenderOptions {
    /// Reproduce the historic behavior where a group box only encloses the
    /// four corner entries of its region instead of everything inside it.
    bool corner_only_groups = false;
};

/// Turns solved geometry into an ordered shape list: wires on layer 0,
/// opaque element boxes on 1, bullets/targets/dials on 2, text on 3 and
/// group overlays on 4.
ShapeList render_shapes(
    const CircuitAst &ast,
    const LayoutGrid &layout,
    const ConnectorSet &connectors,
    const StyleTable &style,
    const RenderOptions &options = {});

}  // namespace qcirc
