#pragma once

#include <string>
#include <string_view>

namespace qcirc {

enum class Unit { Em, Ex, Pt, Mm, Cm, In };

std::string_view unit_name(Unit unit);

/// A TeX-style length. Internal layout math happens in em; the conversion
/// table is fixed (1em = 10pt, 1ex = 4.3pt, 1in = 72.27pt, 1in = 25.4mm).
struct Length {
    double value = 0.0;
    Unit unit = Unit::Em;

    double to_em() const;

    bool operator==(const Length &other) const = default;
};

inline Length em(double value) {
    return Length{value, Unit::Em};
}

/// Formats with the shortest round-tripping decimal, e.g. "0.7em", "1em".
std::string format_length(const Length &len);

/// Parses `<decimal><unit>` with optional sign and leading-dot decimals
/// (".7em"). Throws ParseError with code E105 (BadLength) otherwise.
Length parse_length(std::string_view text);

enum class Uniform { None, Rows, Cols, All };

std::string_view uniform_name(Uniform uniform);

struct SpacingParams {
    Length col_sep = em(1.0);
    Length row_sep = em(1.0);
    Uniform uniform = Uniform::None;

    bool operator==(const SpacingParams &other) const = default;
};

}  // namespace qcirc
