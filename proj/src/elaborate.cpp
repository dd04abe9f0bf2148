#include "qcirc/elaborate.hpp"

#include <charconv>
#include <optional>

#include "qcirc/metrics.hpp"

namespace qcirc {

namespace {

bool is_label_command(const std::string &name) {
    return name == "mbox" || name == "text" || name == "textrm" || name == "mathrm" ||
           name == "mathcal" || name == "ket" || name == "bra" || name == "rule" || name == " ";
}

bool is_decoration_command(const std::string &name) {
    return name == "qw" || name == "cw" || name == "qwx" || name == "cwx";
}

bool is_element_command(const std::string &name) {
    return name == "gate" || name == "targ" || name == "qswap" || name == "multigate" ||
           name == "ghost" || name == "meter" || name == "measure" || name == "measuretab" ||
           name == "measureD" || name == "multimeasure" || name == "multimeasureD" ||
           name == "ctrl" || name == "ctrlo" || name == "control" || name == "controlo" ||
           name == "lstick" || name == "rstick" || name == "ustick" || name == "dstick" ||
           name == "push";
}

std::string flatten_text(const std::vector<Token> &tokens) {
    std::string out;
    for (const auto &tok : tokens) {
        switch (tok.kind) {
            case TokenKind::Text:
                out += tok.value;
                break;
            case TokenKind::Command:
                out += "\\";
                out += tok.value;
                break;
            case TokenKind::Group:
            case TokenKind::Optional:
                out += flatten_text(tok.children);
                break;
            case TokenKind::CellSep:
                out += "&";
                break;
            case TokenKind::RowSep:
                out += "\\\\";
                break;
            case TokenKind::Param:
                out += "@" + tok.value;
                break;
        }
    }
    return out;
}

std::optional<int> parse_int_arg(const std::vector<Token> &tokens) {
    std::string text = flatten_text(tokens);
    while (!text.empty() && text.front() == ' ') {
        text.erase(text.begin());
    }
    while (!text.empty() && text.back() == ' ') {
        text.pop_back();
    }
    if (text.empty()) {
        return std::nullopt;
    }
    const char *first = text.data();
    const char *last = text.data() + text.size();
    if (*first == '+') {
        first++;  // from_chars rejects a leading plus
    }
    int value = 0;
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        return std::nullopt;
    }
    return value;
}

// ---- label parsing ------------------------------------------------------

LabelExpr parse_label(const std::vector<Token> &items, size_t begin, size_t end);

// One node's worth of content starting at `i`; commands consume their
// argument groups. Used for script bases like `U^\dag`.
LabelExpr parse_atom(const std::vector<Token> &items, size_t &i, size_t end);

void parse_command_node(const std::vector<Token> &items, size_t &i, size_t end, LabelExpr &out) {
    const Token &cmd = items[i];
    const std::string &name = cmd.value;
    i++;

    auto take_group = [&]() -> const Token * {
        if (i < end && items[i].kind == TokenKind::Group) {
            return &items[i++];
        }
        return nullptr;
    };

    if (name == " ") {
        out.push_back(LabelNode::make_text(" "));
        return;
    }
    if (name == "mathcal") {
        const Token *arg = take_group();
        out.push_back(LabelNode::make_style(
            LabelStyle::Calligraphic, arg ? parse_label(arg->children, 0, arg->children.size()) : LabelExpr{}));
        return;
    }
    if (name == "mbox" || name == "text" || name == "textrm" || name == "mathrm") {
        const Token *arg = take_group();
        out.push_back(LabelNode::make_style(
            LabelStyle::Upright, arg ? parse_label(arg->children, 0, arg->children.size()) : LabelExpr{}));
        return;
    }
    if (name == "ket" || name == "bra") {
        const Token *arg = take_group();
        out.push_back(LabelNode::make_delim(
            name == "ket" ? LabelNode::Kind::Ket : LabelNode::Kind::Bra,
            arg ? parse_label(arg->children, 0, arg->children.size()) : LabelExpr{}));
        return;
    }
    if (name == "rule") {
        const Token *w = take_group();
        const Token *h = take_group();
        Length width, height;
        try {
            if (w) {
                width = parse_length(flatten_text(w->children));
            }
            if (h) {
                height = parse_length(flatten_text(h->children));
            }
        } catch (const ParseError &) {
            width = {};
            height = {};
        }
        out.push_back(LabelNode::make_rule(width, height));
        return;
    }
    out.push_back(LabelNode::make_symbol(name));
}

LabelExpr parse_atom(const std::vector<Token> &items, size_t &i, size_t end) {
    if (i >= end) {
        return {};
    }
    const Token &tok = items[i];
    if (tok.kind == TokenKind::Group || tok.kind == TokenKind::Optional) {
        i++;
        return parse_label(tok.children, 0, tok.children.size());
    }
    if (tok.kind == TokenKind::Command) {
        LabelExpr out;
        parse_command_node(items, i, end, out);
        return out;
    }
    // single leading char of a text run
    if (tok.kind == TokenKind::Text && !tok.value.empty()) {
        // consume just the run's first character; the rest is handled by
        // re-parsing a trimmed copy, which only happens for odd inputs
        LabelExpr out;
        out.push_back(LabelNode::make_text(tok.value.substr(0, 1)));
        i++;  // the remainder of the run is dropped for script content
        return out;
    }
    i++;
    return {};
}

void parse_text_run(
    const std::vector<Token> &items, size_t &i, size_t end, const std::string &run, LabelExpr &out) {
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(LabelNode::make_text(cur));
            cur.clear();
        }
    };
    for (size_t j = 0; j < run.size(); j++) {
        char c = run[j];
        if (c == '_' || c == '^') {
            flush();
            LabelExpr content;
            if (j + 1 < run.size()) {
                content.push_back(LabelNode::make_text(std::string(1, run[j + 1])));
                j++;
            } else {
                // the script base is the next token entirely
                content = parse_atom(items, i, end);
            }
            out.push_back(LabelNode::make_script(
                c == '_' ? LabelNode::Kind::Sub : LabelNode::Kind::Sup, std::move(content)));
        } else {
            cur += c;
        }
    }
    flush();
}

LabelExpr parse_label(const std::vector<Token> &items, size_t begin, size_t end) {
    LabelExpr out;
    size_t i = begin;
    while (i < end) {
        const Token &tok = items[i];
        switch (tok.kind) {
            case TokenKind::Text: {
                std::string run = tok.value;
                i++;
                parse_text_run(items, i, end, run, out);
                break;
            }
            case TokenKind::Group:
            case TokenKind::Optional: {
                auto inner = parse_label(tok.children, 0, tok.children.size());
                out.insert(out.end(), inner.begin(), inner.end());
                i++;
                break;
            }
            case TokenKind::Command:
                parse_command_node(items, i, end, out);
                break;
            case TokenKind::CellSep:
                out.push_back(LabelNode::make_text("&"));
                i++;
                break;
            default:
                i++;
                break;
        }
    }
    return out;
}

// ---- cell elaboration ---------------------------------------------------

struct CellBuilder {
    int row;
    int col;
    std::vector<Diagnostic> &diags;
    std::vector<GateGroup> &groups;

    Element body = Empty{};
    bool has_body = false;
    bool body_is_open_label = false;  // RawLabel still accumulating
    Span body_span{};
    std::vector<WireDecoration> decorations;
    bool reported_e003 = false;
    bool reported_e006 = false;

    void diag(Severity sev, const char *code, Span span, std::string message) {
        diags.push_back(Diagnostic{sev, code, span, std::move(message), row, col});
    }

    void note_body_placement(const Span &span) {
        if (!decorations.empty() && !reported_e003) {
            reported_e003 = true;
            diag(Severity::Error, E003_DECORATION_FIRST, decorations.front().span,
                 "wire command precedes the entry's gate");
        }
        if (!has_body) {
            body_span = span;
        } else {
            body_span.end = span.end;
        }
    }

    void set_body(Element element, const Span &span, const std::string &what) {
        if (has_body) {
            if (!reported_e006) {
                reported_e006 = true;
                diag(Severity::Error, E006_DUPLICATE_BODY, span,
                     "entry already has a body; '" + what + "' ignored");
            }
            return;
        }
        note_body_placement(span);
        body = std::move(element);
        has_body = true;
        body_is_open_label = false;
    }

    void append_label(LabelExpr expr, const Span &span) {
        if (has_body && !body_is_open_label) {
            if (!reported_e006) {
                reported_e006 = true;
                diag(Severity::Error, E006_DUPLICATE_BODY, span,
                     "entry already has a body; label content ignored");
            }
            return;
        }
        note_body_placement(span);
        if (!has_body) {
            body = RawLabel{std::move(expr)};
            has_body = true;
            body_is_open_label = true;
        } else {
            auto &label = std::get<RawLabel>(body).label;
            label.insert(label.end(), expr.begin(), expr.end());
        }
    }

    void add_decoration(WireKind kind, int offset, bool classical, const Span &span) {
        decorations.push_back(WireDecoration{kind, offset, classical, span});
    }
};

const Token *arg_group(const std::vector<Token> &items, size_t &i) {
    if (i < items.size() && items[i].kind == TokenKind::Group) {
        return &items[i++];
    }
    return nullptr;
}

LabelExpr arg_label(const std::vector<Token> &items, size_t &i) {
    const Token *g = arg_group(items, i);
    if (!g) {
        return {};
    }
    return parse_label(g->children, 0, g->children.size());
}

int arg_int(
    const std::vector<Token> &items, size_t &i, CellBuilder &cell, const Token &cmd, int fallback) {
    const Token *g = arg_group(items, i);
    if (!g) {
        cell.diag(Severity::Error, E007_BAD_OFFSET_ARG, cmd.span,
                  "'\\" + cmd.value + "' is missing its numeric argument");
        return fallback;
    }
    if (auto v = parse_int_arg(g->children)) {
        return *v;
    }
    cell.diag(Severity::Error, E007_BAD_OFFSET_ARG, g->span,
              "'\\" + cmd.value + "' needs an integer argument");
    return fallback;
}

int optional_int(const std::vector<Token> &items, size_t &i, CellBuilder &cell, int fallback) {
    if (i < items.size() && items[i].kind == TokenKind::Optional) {
        const Token &opt = items[i];
        i++;
        if (auto v = parse_int_arg(opt.children)) {
            return *v;
        }
        cell.diag(Severity::Error, E007_BAD_OFFSET_ARG, opt.span, "expected an integer in '[...]'");
    }
    return fallback;
}

std::optional<GroupStyle> parse_group_style(const std::string &text) {
    if (text == "--") return GroupStyle::DashedBox;
    if (text == ".") return GroupStyle::DottedBox;
    if (text == "_\\}") return GroupStyle::BraceBottom;
    if (text == "^\\}") return GroupStyle::BraceTop;
    if (text == "\\{") return GroupStyle::BraceLeft;
    if (text == "\\}") return GroupStyle::BraceRight;
    if (text == "_)") return GroupStyle::ParenBottom;
    if (text == "^)") return GroupStyle::ParenTop;
    if (text == "(") return GroupStyle::ParenLeft;
    if (text == ")") return GroupStyle::ParenRight;
    return std::nullopt;
}

void handle_gategroup(const std::vector<Token> &items, size_t &i, const Token &cmd, CellBuilder &cell) {
    const Token *args[6] = {};
    Span span = cmd.span;
    for (auto &arg : args) {
        arg = arg_group(items, i);
        if (!arg) {
            cell.diag(Severity::Warning, W004_GROUP_STYLE, cmd.span,
                      "malformed \\gategroup (expected six {...} arguments); dropped");
            return;
        }
        span.end = arg->span.end;
    }
    auto r1 = parse_int_arg(args[0]->children);
    auto c1 = parse_int_arg(args[1]->children);
    auto r2 = parse_int_arg(args[2]->children);
    auto c2 = parse_int_arg(args[3]->children);
    if (!r1 || !c1 || !r2 || !c2) {
        cell.diag(Severity::Warning, W004_GROUP_STYLE, cmd.span,
                  "malformed \\gategroup (non-integer region); dropped");
        return;
    }
    Length pad;
    try {
        pad = parse_length(flatten_text(args[4]->children));
    } catch (const ParseError &) {
        cell.diag(Severity::Warning, W004_GROUP_STYLE, args[4]->span,
                  "malformed \\gategroup (bad padding length); dropped");
        return;
    }
    auto style = parse_group_style(flatten_text(args[5]->children));
    if (!style) {
        cell.diag(Severity::Warning, W004_GROUP_STYLE, args[5]->span,
                  "unknown \\gategroup highlight '" + flatten_text(args[5]->children) + "'; dropped");
        return;
    }
    GateGroup group;
    group.r1 = std::min(*r1, *r2);
    group.r2 = std::max(*r1, *r2);
    group.c1 = std::min(*c1, *c2);
    group.c2 = std::max(*c1, *c2);
    group.pad = pad;
    group.style = *style;
    group.span = span;
    cell.groups.push_back(group);
}

void handle_element(const std::vector<Token> &items, size_t &i, const Token &cmd, CellBuilder &cell) {
    const std::string &name = cmd.value;
    Span span = cmd.span;
    auto extend = [&](size_t end_index) {
        if (end_index > 0 && end_index <= items.size()) {
            span.end = items[end_index - 1].span.end;
        }
    };

    if (name == "gate") {
        auto label = arg_label(items, i);
        extend(i);
        cell.set_body(Gate{std::move(label)}, span, "\\gate");
    } else if (name == "targ") {
        cell.set_body(Targ{}, span, "\\targ");
    } else if (name == "qswap") {
        // \qswap is {\times} \qw: the swap glyph plus a leftward wire
        cell.set_body(Swap{}, span, "\\qswap");
        cell.add_decoration(WireKind::Horizontal, -1, false, span);
    } else if (name == "multigate") {
        int depth = arg_int(items, i, cell, cmd, 1);
        auto label = arg_label(items, i);
        extend(i);
        cell.set_body(MultiGateTop{depth, std::move(label)}, span, "\\multigate");
    } else if (name == "ghost") {
        auto label = arg_label(items, i);
        extend(i);
        cell.set_body(Ghost{std::move(label)}, span, "\\ghost");
    } else if (name == "meter") {
        cell.set_body(Meter{}, span, "\\meter");
    } else if (name == "measure") {
        auto label = arg_label(items, i);
        extend(i);
        cell.set_body(Measure{std::move(label)}, span, "\\measure");
    } else if (name == "measuretab") {
        auto label = arg_label(items, i);
        extend(i);
        cell.set_body(MeasureTab{std::move(label)}, span, "\\measuretab");
    } else if (name == "measureD") {
        auto label = arg_label(items, i);
        extend(i);
        cell.set_body(MeasureD{std::move(label)}, span, "\\measureD");
    } else if (name == "multimeasure" || name == "multimeasureD") {
        int depth = arg_int(items, i, cell, cmd, 1);
        auto label = arg_label(items, i);
        extend(i);
        auto style = name == "multimeasureD" ? MultiMeasureStyle::D : MultiMeasureStyle::Plain;
        cell.set_body(MultiMeasureTop{depth, std::move(label), style}, span, "\\" + name);
    } else if (name == "ctrl" || name == "ctrlo") {
        int offset = arg_int(items, i, cell, cmd, 1);
        extend(i);
        cell.set_body(Ctrl{offset, name == "ctrlo"}, span, "\\" + name);
    } else if (name == "control" || name == "controlo") {
        cell.set_body(Control{name == "controlo"}, span, "\\" + name);
    } else if (name == "lstick" || name == "rstick" || name == "ustick" || name == "dstick") {
        auto label = arg_label(items, i);
        extend(i);
        StickDir dir = StickDir::Left;
        if (name == "rstick") {
            dir = StickDir::Right;
        } else if (name == "ustick") {
            dir = StickDir::Up;
        } else if (name == "dstick") {
            dir = StickDir::Down;
        }
        cell.set_body(Stick{dir, std::move(label)}, span, "\\" + name);
    } else if (name == "push") {
        auto label = arg_label(items, i);
        extend(i);
        cell.set_body(Push{std::move(label)}, span, "\\push");
    }
}

Cell elaborate_cell(
    const RawCell &raw, int row, int col, std::vector<Diagnostic> &diags, std::vector<GateGroup> &groups) {
    CellBuilder cell{row, col, diags, groups};
    const auto &items = raw.items;
    size_t i = 0;
    while (i < items.size()) {
        const Token &tok = items[i];
        if (tok.kind == TokenKind::Command) {
            const std::string &name = tok.value;
            if (name == "gategroup") {
                i++;
                handle_gategroup(items, i, tok, cell);
                continue;
            }
            if (is_decoration_command(name)) {
                i++;
                bool classical = name[0] == 'c';
                bool vertical = name.back() == 'x';
                int offset = optional_int(items, i, cell, -1);
                cell.add_decoration(
                    vertical ? WireKind::Vertical : WireKind::Horizontal, offset, classical, tok.span);
                continue;
            }
            if (is_element_command(name)) {
                i++;
                handle_element(items, i, tok, cell);
                continue;
            }
            if (is_label_command(name) || default_metrics().knows_symbol(name)) {
                size_t start = i;
                LabelExpr expr;
                parse_command_node(items, i, items.size(), expr);
                Span span = tok.span;
                if (i > start + 1) {
                    span.end = items[i - 1].span.end;
                }
                cell.append_label(std::move(expr), span);
                continue;
            }
            diags.push_back(Diagnostic{
                Severity::Error, E004_UNKNOWN_COMMAND, tok.span,
                "unknown command '\\" + name + "'", row, col});
            i++;
            continue;
        }
        if (tok.kind == TokenKind::Text || tok.kind == TokenKind::Group ||
            tok.kind == TokenKind::Optional) {
            size_t start = i;
            // greedily take the run of plain label material
            size_t j = i;
            while (j < items.size()) {
                const Token &t = items[j];
                if (t.kind == TokenKind::Text || t.kind == TokenKind::Group ||
                    t.kind == TokenKind::Optional) {
                    j++;
                } else if (t.kind == TokenKind::Command &&
                           (is_label_command(t.value) || default_metrics().knows_symbol(t.value))) {
                    j++;
                } else {
                    break;
                }
            }
            auto expr = parse_label(items, start, j);
            Span span = tok.span;
            span.end = items[j - 1].span.end;
            cell.append_label(std::move(expr), span);
            i = j;
            continue;
        }
        // stray separators or params cannot appear inside a cell
        i++;
    }

    Cell out;
    out.body = std::move(cell.body);
    out.decorations = std::move(cell.decorations);
    out.span = raw.span;
    out.body_span = cell.has_body ? cell.body_span : raw.span;
    return out;
}

}  // namespace

ElaborateResult elaborate(const ParsedCircuit &parsed) {
    ElaborateResult result;
    result.ast.params = parsed.params;

    size_t cols = 0;
    for (const auto &row : parsed.rows) {
        cols = std::max(cols, row.size());
    }

    for (size_t r = 0; r < parsed.rows.size(); r++) {
        const auto &raw_row = parsed.rows[r];
        std::vector<Cell> row;
        row.reserve(cols);
        for (size_t c = 0; c < raw_row.size(); c++) {
            row.push_back(elaborate_cell(
                raw_row[c], static_cast<int>(r) + 1, static_cast<int>(c) + 1, result.diagnostics,
                result.ast.groups));
        }
        while (row.size() < cols) {
            Span pad = raw_row.empty() ? Span{} : raw_row.back().span;
            pad.begin = pad.end;
            row.push_back(Cell{Empty{}, {}, pad, pad});
        }
        result.ast.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace qcirc
