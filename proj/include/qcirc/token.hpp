#pragma once

#include <string>
#include <vector>

#include "qcirc/span.hpp"

namespace qcirc {

enum class TokenKind {
    Command,   // \name (value = name; "\\ " control space has value " ")
    Group,     // {...} (children = subtokens)
    Optional,  // [...] immediately after a command (children = subtokens)
    CellSep,   // &
    RowSep,    // \\
    Text,      // run of plain characters; internal blank runs collapse to one space
    Param,     // @C=1em / @R=.7em / @!R / @!C / @! (value excludes the '@')
};

const char *token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string value;
    std::vector<Token> children;
    Span span;

    bool is_command(std::string_view name) const {
        return kind == TokenKind::Command && value == name;
    }
};

}  // namespace qcirc
