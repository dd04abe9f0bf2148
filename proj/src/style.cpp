#include "qcirc/style.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qcirc/diagnostics.hpp"
#include "qcirc/length.hpp"

namespace qcirc {

namespace {

struct LengthKey {
    const char *name;
    double StyleTable::*field;
};

constexpr LengthKey LENGTH_KEYS[] = {
    {"gate_pad_x", &StyleTable::gate_pad_x},
    {"gate_pad_y", &StyleTable::gate_pad_y},
    {"ctrl_radius", &StyleTable::ctrl_radius},
    {"targ_radius", &StyleTable::targ_radius},
    {"swap_half", &StyleTable::swap_half},
    {"meter_width", &StyleTable::meter_width},
    {"meter_height", &StyleTable::meter_height},
    {"stick_gap", &StyleTable::stick_gap},
    {"stroke_width", &StyleTable::stroke_width},
    {"classical_gap", &StyleTable::classical_gap},
    {"dash_on", &StyleTable::dash_on},
    {"dash_off", &StyleTable::dash_off},
    {"dot_on", &StyleTable::dot_on},
    {"dot_off", &StyleTable::dot_off},
    {"meter_arc_radius", &StyleTable::meter_arc_radius},
    {"brace_depth", &StyleTable::brace_depth},
    {"tab_size", &StyleTable::tab_size},
    {"margin", &StyleTable::margin},
};

std::string trim(std::string s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    return s.substr(b, e - b + 1);
}

}  // namespace

StyleTable apply_style_overrides(std::string_view text, StyleTable base) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == '%') {
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(
                "style line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key == "background" || key == "foreground") {
            if (value.empty()) {
                throw std::runtime_error("style line " + std::to_string(lineno) + ": empty color");
            }
            (key == "background" ? base.background : base.foreground) = value;
            continue;
        }
        bool matched = false;
        for (const auto &entry : LENGTH_KEYS) {
            if (key == entry.name) {
                try {
                    base.*(entry.field) = parse_length(value).to_em();
                } catch (const ParseError &e) {
                    throw std::runtime_error(
                        "style line " + std::to_string(lineno) + ": " + e.what());
                }
                matched = true;
                break;
            }
        }
        if (!matched) {
            throw std::runtime_error(
                "style line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (base.classical_gap <= base.stroke_width) {
        throw std::runtime_error("classical_gap must exceed stroke_width");
    }
    return base;
}

StyleTable load_style_file(const std::string &path, StyleTable base) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open style file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return apply_style_overrides(buf.str(), base);
}

}  // namespace qcirc
