#include "qcirc/parse.hpp"

#include "qcirc/diagnostics.hpp"
#include "qcirc/tokenize.hpp"

namespace qcirc {

namespace {

Uniform combine_uniform(Uniform current, Uniform incoming) {
    if (current == incoming || incoming == Uniform::None) {
        return current;
    }
    if (current == Uniform::None) {
        return incoming;
    }
    if (current == Uniform::All || incoming == Uniform::All) {
        return Uniform::All;
    }
    // rows + cols
    return Uniform::All;
}

void apply_param(SpacingParams &params, const Token &token) {
    const std::string &v = token.value;
    if (v == "!") {
        params.uniform = combine_uniform(params.uniform, Uniform::All);
        return;
    }
    if (v == "!R") {
        params.uniform = combine_uniform(params.uniform, Uniform::Rows);
        return;
    }
    if (v == "!C") {
        params.uniform = combine_uniform(params.uniform, Uniform::Cols);
        return;
    }
    size_t eq = v.find('=');
    if (eq != std::string::npos) {
        std::string name = v.substr(0, eq);
        std::string raw = v.substr(eq + 1);
        if (name == "C" || name == "R") {
            Length len;
            try {
                len = parse_length(raw);
            } catch (const ParseError &e) {
                throw ParseError(E105_BAD_LENGTH, token.span, e.what());
            }
            (name == "C" ? params.col_sep : params.row_sep) = len;
            return;
        }
    }
    throw ParseError(E104_UNKNOWN_PARAM, token.span, "unknown parameter '@" + v + "'");
}

std::vector<std::vector<RawCell>> split_grid(const Token &body) {
    std::vector<std::vector<RawCell>> rows;
    std::vector<RawCell> row;
    RawCell cell;

    auto finish_cell = [&](const Span &boundary) {
        if (cell.items.empty()) {
            cell.span = Span{boundary.line, boundary.column, boundary.begin, boundary.begin};
        } else {
            cell.span = cell.items.front().span;
            cell.span.end = cell.items.back().span.end;
        }
        row.push_back(std::move(cell));
        cell = RawCell{};
    };

    for (const Token &tok : body.children) {
        if (tok.kind == TokenKind::CellSep) {
            finish_cell(tok.span);
        } else if (tok.kind == TokenKind::RowSep) {
            finish_cell(tok.span);
            rows.push_back(std::move(row));
            row.clear();
        } else {
            cell.items.push_back(tok);
        }
    }
    Span closing{body.span.line, body.span.column, body.span.end, body.span.end};
    finish_cell(closing);
    rows.push_back(std::move(row));

    // a final \\ leaves one empty trailing row behind; drop it
    if (!body.children.empty() && body.children.back().kind == TokenKind::RowSep) {
        rows.pop_back();
    }
    return rows;
}

}  // namespace

ParsedCircuit parse(std::string_view source) {
    auto tokens = tokenize(source);
    size_t i = 0;
    size_t n = tokens.size();

    bool math_wrapped = false;
    if (i < n && tokens[i].is_command("[")) {
        math_wrapped = true;
        i++;
    }
    if (i < n && tokens[i].is_command("Qcircuit")) {
        i++;
    }

    ParsedCircuit result;
    while (i < n && tokens[i].kind == TokenKind::Param) {
        apply_param(result.params, tokens[i]);
        i++;
    }

    if (i >= n || tokens[i].kind != TokenKind::Group) {
        Span at = i < n ? tokens[i].span
                        : Span{1, 1, source.size(), source.size()};
        throw ParseError(E103_MISSING_BODY, at, "expected '{' circuit body");
    }
    const Token &body = tokens[i];
    i++;

    if (math_wrapped && i < n && tokens[i].is_command("]")) {
        i++;
    }
    if (i < n) {
        throw ParseError(E106_TRAILING_CONTENT, tokens[i].span, "unexpected content after circuit body");
    }

    result.rows = split_grid(body);
    return result;
}

}  // namespace qcirc
