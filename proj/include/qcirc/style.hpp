#pragma once

#include <string>
#include <string_view>

namespace qcirc {

/// Every fixed size the layout and renderer use, in em, plus the two colors.
/// Overridable from a `key = value` config file; defaults match the embedded
/// metrics.
struct StyleTable {
    // layout
    double gate_pad_x = 0.4;
    double gate_pad_y = 0.3;
    double ctrl_radius = 0.22;
    double targ_radius = 0.45;
    double swap_half = 0.35;   // half-diagonal of the swap cross
    double meter_width = 1.2;
    double meter_height = 0.9;
    double stick_gap = 0.2;    // gap between stick text and the cell center

    // strokes
    double stroke_width = 0.04;
    double classical_gap = 0.08;  // distance between the two classical lines
    double dash_on = 0.2;
    double dash_off = 0.15;
    double dot_on = 0.02;
    double dot_off = 0.12;

    // meter glyph
    double meter_arc_radius = 0.35;
    double meter_arc_span_deg = 160.0;
    double meter_needle_deg = 65.0;
    double meter_needle_scale = 1.25;  // needle length / arc radius

    // group overlays
    double brace_depth = 0.25;  // bulge of braces and parens
    double tab_size = 0.25;     // folded corner of \measuretab

    // canvas
    double margin = 0.5;
    double units_per_em = 10.0;  // user units per em at scale 1 (1 unit = 1pt)

    std::string background = "white";
    std::string foreground = "black";
};

/// Applies `key = value` overrides from a config file. Lines starting with
/// `#` or `%` are comments. Unknown keys, bad lengths, or a classical gap
/// not exceeding the stroke width raise std::runtime_error.
StyleTable load_style_file(const std::string &path, StyleTable base = {});

/// Same, from in-memory text (the CLI test path).
StyleTable apply_style_overrides(std::string_view text, StyleTable base = {});

}  // namespace qcirc
