#include "qcirc/length.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "qcirc/diagnostics.hpp"

namespace qcirc {

std::string_view unit_name(Unit unit) {
    switch (unit) {
        case Unit::Em:
            return "em";
        case Unit::Ex:
            return "ex";
        case Unit::Pt:
            return "pt";
        case Unit::Mm:
            return "mm";
        case Unit::Cm:
            return "cm";
        case Unit::In:
            return "in";
    }
    return "em";
}

// Points per unit: 1em = 10pt, 1ex = 4.3pt, 1in = 72.27pt = 25.4mm.
static double unit_points(Unit unit) {
    switch (unit) {
        case Unit::Em:
            return 10.0;
        case Unit::Ex:
            return 4.3;
        case Unit::Pt:
            return 1.0;
        case Unit::Mm:
            return 72.27 / 25.4;
        case Unit::Cm:
            return 72.27 / 2.54;
        case Unit::In:
            return 72.27;
    }
    return 10.0;
}

double Length::to_em() const {
    return value * (unit_points(unit) / 10.0);
}

std::string format_length(const Length &len) {
    std::array<char, 64> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), len.value);
    std::string out(buf.data(), res.ptr);
    // to_chars emits "0.7" / "1" style shortest forms already
    out += unit_name(len.unit);
    return out;
}

Length parse_length(std::string_view text) {
    auto fail = [&] {
        throw ParseError(E105_BAD_LENGTH, Span{}, "bad length '" + std::string(text) + "'");
    };
    if (text.size() < 3) {
        fail();
    }
    std::string_view unit_part = text.substr(text.size() - 2);
    std::string_view num_part = text.substr(0, text.size() - 2);
    Unit unit;
    if (unit_part == "em") {
        unit = Unit::Em;
    } else if (unit_part == "ex") {
        unit = Unit::Ex;
    } else if (unit_part == "pt") {
        unit = Unit::Pt;
    } else if (unit_part == "mm") {
        unit = Unit::Mm;
    } else if (unit_part == "cm") {
        unit = Unit::Cm;
    } else if (unit_part == "in") {
        unit = Unit::In;
    } else {
        fail();
        return {};
    }
    // optional sign, decimal digits, at most one dot, leading dot allowed
    size_t i = 0;
    if (num_part[i] == '+' || num_part[i] == '-') {
        i++;
    }
    bool digits = false;
    bool dot = false;
    for (; i < num_part.size(); i++) {
        char c = num_part[i];
        if (c >= '0' && c <= '9') {
            digits = true;
        } else if (c == '.' && !dot) {
            dot = true;
        } else {
            fail();
        }
    }
    if (!digits) {
        fail();
    }
    double value = std::strtod(std::string(num_part).c_str(), nullptr);
    if (!std::isfinite(value)) {
        fail();
    }
    return Length{value, unit};
}

std::string_view uniform_name(Uniform uniform) {
    switch (uniform) {
        case Uniform::None:
            return "none";
        case Uniform::Rows:
            return "rows";
        case Uniform::Cols:
            return "cols";
        case Uniform::All:
            return "all";
    }
    return "none";
}

}  // namespace qcirc
