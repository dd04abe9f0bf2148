#include "qcirc/metrics.hpp"

#include <string_view>
#include <utility>

namespace qcirc {

// Advance widths for 0x20..0x7E, loosely following a 10pt serif roman.
static constexpr double ASCII_ADVANCES[95] = {
    0.33,  // space
    0.28,  // !
    0.50,  // "
    0.83,  // #
    0.50,  // $
    0.83,  // %
    0.78,  // &
    0.28,  // '
    0.39,  // (
    0.39,  // )
    0.50,  // *
    0.78,  // +
    0.28,  // ,
    0.33,  // -
    0.28,  // .
    0.50,  // /
    0.50, 0.50, 0.50, 0.50, 0.50, 0.50, 0.50, 0.50, 0.50, 0.50,  // 0-9
    0.28,  // :
    0.28,  // ;
    0.78,  // <
    0.78,  // =
    0.78,  // >
    0.47,  // ?
    0.78,  // @
    0.75, 0.71, 0.72, 0.76, 0.68, 0.65, 0.78, 0.75, 0.36, 0.52,  // A-J
    0.78, 0.63, 0.92, 0.75, 0.78, 0.68, 0.78, 0.74, 0.56, 0.72,  // K-T
    0.75, 0.75, 1.03, 0.75, 0.75, 0.61,                          // U-Z
    0.28,  // [
    0.50,  // backslash
    0.28,  // ]
    0.50,  // ^
    0.50,  // _
    0.28,  // `
    0.50, 0.56, 0.44, 0.56, 0.44, 0.31, 0.50, 0.56, 0.28, 0.31,  // a-j
    0.53, 0.28, 0.83, 0.56, 0.50, 0.56, 0.53, 0.39, 0.39, 0.39,  // k-t
    0.56, 0.53, 0.72, 0.53, 0.53, 0.44,                          // u-z
    0.50,  // {
    0.28,  // |
    0.50,  // }
    0.50,  // ~
};

double FontMetrics::advance(char c) const {
    unsigned char u = static_cast<unsigned char>(c);
    if (u >= 0x20 && u <= 0x7E) {
        return ASCII_ADVANCES[u - 0x20];
    }
    return fallback_char_width;
}

namespace {

struct SymbolEntry {
    std::string_view name;
    double advance;
    std::string_view glyph;
};

// Supported named symbols and the UTF-8 glyphs the emitter uses for them.
constexpr SymbolEntry SYMBOLS[] = {
    {"Delta", 0.83, "Δ"},
    {"Gamma", 0.63, "Γ"},
    {"Lambda", 0.69, "Λ"},
    {"Omega", 0.72, "Ω"},
    {"Phi", 0.72, "Φ"},
    {"Pi", 0.75, "Π"},
    {"Psi", 0.78, "Ψ"},
    {"Sigma", 0.72, "Σ"},
    {"Theta", 0.78, "Θ"},
    {"Upsilon", 0.78, "Υ"},
    {"Xi", 0.67, "Ξ"},
    {"alpha", 0.64, "α"},
    {"beta", 0.57, "β"},
    {"bullet", 0.50, "•"},
    {"cdot", 0.28, "⋅"},
    {"cdots", 1.17, "⋯"},
    {"chi", 0.62, "χ"},
    {"circ", 0.44, "∘"},
    {"dag", 0.44, "†"},
    {"dagger", 0.44, "†"},
    {"ddag", 0.44, "‡"},
    {"delta", 0.44, "δ"},
    {"epsilon", 0.47, "ε"},
    {"eta", 0.57, "η"},
    {"gamma", 0.54, "γ"},
    {"infty", 1.00, "∞"},
    {"iota", 0.33, "ι"},
    {"kappa", 0.58, "κ"},
    {"lambda", 0.58, "λ"},
    {"langle", 0.39, "⟨"},
    {"ldots", 1.17, "…"},
    {"mu", 0.60, "μ"},
    {"nu", 0.56, "ν"},
    {"omega", 0.62, "ω"},
    {"omicron", 0.50, "ο"},
    {"oplus", 0.78, "⊕"},
    {"otimes", 0.78, "⊗"},
    {"phi", 0.60, "φ"},
    {"pi", 0.57, "π"},
    {"pm", 0.78, "±"},
    {"prime", 0.28, "′"},
    {"psi", 0.65, "ψ"},
    {"rangle", 0.39, "⟩"},
    {"rho", 0.52, "ρ"},
    {"sigma", 0.57, "σ"},
    {"tau", 0.44, "τ"},
    {"theta", 0.48, "θ"},
    {"times", 0.78, "×"},
    {"upsilon", 0.54, "υ"},
    {"vert", 0.28, "|"},
    {"xi", 0.44, "ξ"},
    {"zeta", 0.45, "ζ"},
};

const SymbolEntry *find_symbol(std::string_view name) {
    for (const auto &entry : SYMBOLS) {
        if (entry.name == name) {
            return &entry;
        }
    }
    return nullptr;
}

}  // namespace

double FontMetrics::symbol_advance(std::string_view name) const {
    const SymbolEntry *entry = find_symbol(name);
    return entry ? entry->advance : -1.0;
}

std::string_view symbol_glyph(std::string_view name) {
    const SymbolEntry *entry = find_symbol(name);
    return entry ? entry->glyph : std::string_view{};
}

const FontMetrics &default_metrics() {
    static const FontMetrics metrics{};
    return metrics;
}

}  // namespace qcirc
