#pragma once

#include <string_view>

namespace qcirc {

/// Embedded font metrics, all in em. Layout never consults host fonts; these
/// numbers are part of the output contract and only change with the version
/// tag.
struct FontMetrics {
    const char *version = "qcirc-metrics/1";

    double cap_height = 0.68;
    double x_height = 0.43;
    double descender = 0.19;
    double axis_height = 0.25;  // center line sits this far above the baseline
    double script_scale = 0.7;
    double sup_raise = 0.36;    // baseline shift of superscripts
    double sub_drop = 0.15;     // baseline shift of subscripts
    double fallback_char_width = 0.5;

    /// Advance width of one ASCII char.
    double advance(char c) const;

    /// Advance width of a named symbol ("dag", "otimes", ...); negative when
    /// unknown (callers fall back to fallback_char_width per name char).
    double symbol_advance(std::string_view name) const;

    bool knows_symbol(std::string_view name) const {
        return symbol_advance(name) >= 0.0;
    }
};

const FontMetrics &default_metrics();

/// UTF-8 glyph for a named symbol; empty when unknown (renderers then show
/// the name itself).
std::string_view symbol_glyph(std::string_view name);

}  // namespace qcirc
