#pragma once

#include <string>
#include <vector>

#include "qcirc/length.hpp"

namespace qcirc {

struct LabelNode;

/// Ordered runs of a micro-math label (the subset of math notation the
/// renderer understands: text, scripts, two font styles, named symbols,
/// ket/bra, and invisible rules).
using LabelExpr = std::vector<LabelNode>;

enum class LabelStyle { Calligraphic, Upright };

struct LabelNode {
    enum class Kind { Text, Sub, Sup, Style, Symbol, Ket, Bra, Rule };

    Kind kind = Kind::Text;
    std::string text;      // Text content or Symbol name
    LabelExpr content;     // Sub/Sup/Style/Ket/Bra payload
    LabelStyle style = LabelStyle::Upright;
    Length rule_width;     // Rule only
    Length rule_height;

    bool operator==(const LabelNode &other) const;

    static LabelNode make_text(std::string value);
    static LabelNode make_symbol(std::string name);
    static LabelNode make_script(Kind kind, LabelExpr content);
    static LabelNode make_style(LabelStyle style, LabelExpr content);
    static LabelNode make_delim(Kind kind, LabelExpr content);  // Ket/Bra
    static LabelNode make_rule(Length width, Length height);
};

bool label_equal(const LabelExpr &a, const LabelExpr &b);

/// Debug/warning rendering, e.g. `U^\dag` -> "U^\dag".
std::string label_to_string(const LabelExpr &label);

/// Collects symbol names with no metrics entry (drives W101).
void collect_unknown_symbols(const LabelExpr &label, std::vector<std::string> &out);

}  // namespace qcirc
