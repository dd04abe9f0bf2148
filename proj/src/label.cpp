#include "qcirc/label.hpp"

#include "qcirc/metrics.hpp"

namespace qcirc {

bool LabelNode::operator==(const LabelNode &other) const {
    if (kind != other.kind) {
        return false;
    }
    switch (kind) {
        case Kind::Text:
        case Kind::Symbol:
            return text == other.text;
        case Kind::Style:
            return style == other.style && label_equal(content, other.content);
        case Kind::Rule:
            return rule_width == other.rule_width && rule_height == other.rule_height;
        default:
            return label_equal(content, other.content);
    }
}

LabelNode LabelNode::make_text(std::string value) {
    LabelNode node;
    node.kind = Kind::Text;
    node.text = std::move(value);
    return node;
}

LabelNode LabelNode::make_symbol(std::string name) {
    LabelNode node;
    node.kind = Kind::Symbol;
    node.text = std::move(name);
    return node;
}

LabelNode LabelNode::make_script(Kind kind, LabelExpr content) {
    LabelNode node;
    node.kind = kind;
    node.content = std::move(content);
    return node;
}

LabelNode LabelNode::make_style(LabelStyle style, LabelExpr content) {
    LabelNode node;
    node.kind = Kind::Style;
    node.style = style;
    node.content = std::move(content);
    return node;
}

LabelNode LabelNode::make_delim(Kind kind, LabelExpr content) {
    LabelNode node;
    node.kind = kind;
    node.content = std::move(content);
    return node;
}

LabelNode LabelNode::make_rule(Length width, Length height) {
    LabelNode node;
    node.kind = Kind::Rule;
    node.rule_width = width;
    node.rule_height = height;
    return node;
}

bool label_equal(const LabelExpr &a, const LabelExpr &b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (size_t i = 0; i < a.size(); i++) {
        if (!(a[i] == b[i])) {
            return false;
        }
    }
    return true;
}

static void append_node(const LabelNode &node, std::string &out) {
    switch (node.kind) {
        case LabelNode::Kind::Text:
            out += node.text;
            break;
        case LabelNode::Kind::Symbol:
            out += "\\";
            out += node.text;
            break;
        case LabelNode::Kind::Sub:
            out += "_{" + label_to_string(node.content) + "}";
            break;
        case LabelNode::Kind::Sup:
            out += "^{" + label_to_string(node.content) + "}";
            break;
        case LabelNode::Kind::Style:
            out += node.style == LabelStyle::Calligraphic ? "\\mathcal{" : "\\mbox{";
            out += label_to_string(node.content) + "}";
            break;
        case LabelNode::Kind::Ket:
            out += "\\ket{" + label_to_string(node.content) + "}";
            break;
        case LabelNode::Kind::Bra:
            out += "\\bra{" + label_to_string(node.content) + "}";
            break;
        case LabelNode::Kind::Rule:
            out += "\\rule{" + format_length(node.rule_width) + "}{" + format_length(node.rule_height) + "}";
            break;
    }
}

std::string label_to_string(const LabelExpr &label) {
    std::string out;
    for (const auto &node : label) {
        append_node(node, out);
    }
    return out;
}

void collect_unknown_symbols(const LabelExpr &label, std::vector<std::string> &out) {
    for (const auto &node : label) {
        if (node.kind == LabelNode::Kind::Symbol) {
            if (!default_metrics().knows_symbol(node.text)) {
                out.push_back(node.text);
            }
        } else if (!node.content.empty()) {
            collect_unknown_symbols(node.content, out);
        }
    }
}

}  // namespace qcirc
