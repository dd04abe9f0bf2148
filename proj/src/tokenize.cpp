#include "qcirc/tokenize.hpp"

#include <cctype>

namespace qcirc {

const char *token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Command:
            return "command";
        case TokenKind::Group:
            return "group";
        case TokenKind::Optional:
            return "optional";
        case TokenKind::CellSep:
            return "cell_sep";
        case TokenKind::RowSep:
            return "row_sep";
        case TokenKind::Text:
            return "text";
        case TokenKind::Param:
            return "param";
    }
    return "?";
}

namespace {

bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

bool is_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

struct Scanner {
    std::string_view src;
    size_t pos = 0;
    uint32_t line = 1;
    uint32_t column = 1;

    bool at_end() const {
        return pos >= src.size();
    }
    char peek(size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    void advance() {
        if (src[pos] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
        pos++;
    }
    void advance_to(size_t target) {
        while (pos < target) {
            advance();
        }
    }
    Span mark() const {
        return Span{line, column, pos, pos};
    }
    Span close(Span span) const {
        span.end = pos;
        return span;
    }

    // Position after a run of blanks and %-comments starting at `from`,
    // without consuming anything.
    size_t skip_blank_from(size_t from) const {
        size_t i = from;
        while (i < src.size()) {
            if (is_blank(src[i])) {
                i++;
            } else if (src[i] == '%') {
                while (i < src.size() && src[i] != '\n') {
                    i++;
                }
            } else {
                break;
            }
        }
        return i;
    }
};

class Tokenizer {
  public:
    explicit Tokenizer(std::string_view source) : s_{source} {}

    std::vector<Token> run() {
        auto tokens = scan_sequence(0, '\0');
        return tokens;
    }

  private:
    Scanner s_;

    [[noreturn]] void fail(const char *code, Span span, const std::string &message) {
        throw ParseError(code, span, message);
    }

    // Scans until `terminator` ('\0' = end of input). The terminator itself
    // is left unconsumed.
    std::vector<Token> scan_sequence(int depth, char terminator) {
        std::vector<Token> tokens;
        while (!s_.at_end()) {
            char c = s_.peek();
            if (c == terminator && terminator != '\0') {
                return tokens;
            }
            if (is_blank(c)) {
                s_.advance();
                continue;
            }
            if (c == '%') {
                skip_comment();
                continue;
            }
            if (c == '}') {
                fail(E101_UNBALANCED_BRACE, s_.close(s_.mark()), "unmatched '}'");
            }
            if (c == '{') {
                tokens.push_back(scan_group(depth));
                continue;
            }
            if (c == '&') {
                Span span = s_.mark();
                s_.advance();
                tokens.push_back(Token{TokenKind::CellSep, "&", {}, s_.close(span)});
                continue;
            }
            if (c == '@' && depth == 0) {
                tokens.push_back(scan_param());
                continue;
            }
            if (c == '\\') {
                scan_backslash(tokens, depth);
                continue;
            }
            tokens.push_back(scan_text(depth, terminator));
        }
        if (terminator != '\0') {
            // caller reports the opener's span
            return tokens;
        }
        return tokens;
    }

    void skip_comment() {
        while (!s_.at_end() && s_.peek() != '\n') {
            s_.advance();
        }
        if (!s_.at_end()) {
            s_.advance();
        }
    }

    Token scan_group(int depth) {
        Span open = s_.mark();
        s_.advance();  // {
        auto children = scan_sequence(depth + 1, '}');
        if (s_.at_end()) {
            fail(E101_UNBALANCED_BRACE, Span{open.line, open.column, open.begin, open.begin + 1},
                 "unclosed '{'");
        }
        s_.advance();  // }
        return Token{TokenKind::Group, "", std::move(children), s_.close(open)};
    }

    Token scan_optional(int depth) {
        Span open = s_.mark();
        s_.advance();  // [
        auto children = scan_sequence(depth + 1, ']');
        if (s_.at_end()) {
            fail(E101_UNBALANCED_BRACE, Span{open.line, open.column, open.begin, open.begin + 1},
                 "unclosed '['");
        }
        s_.advance();  // ]
        return Token{TokenKind::Optional, "", std::move(children), s_.close(open)};
    }

    void scan_backslash(std::vector<Token> &tokens, int depth) {
        Span span = s_.mark();
        s_.advance();  // backslash
        if (s_.at_end()) {
            fail(E102_BARE_BACKSLASH, s_.close(span), "bare '\\' at end of input");
        }
        char c = s_.peek();
        if (c == '\\') {
            s_.advance();
            tokens.push_back(Token{TokenKind::RowSep, "\\\\", {}, s_.close(span)});
            return;
        }
        std::string name;
        if (is_letter(c)) {
            while (!s_.at_end() && is_letter(s_.peek())) {
                name += s_.peek();
                s_.advance();
            }
        } else if (is_blank(c)) {
            // control space
            name = " ";
            s_.advance();
        } else {
            name = c;
            s_.advance();
        }
        tokens.push_back(Token{TokenKind::Command, std::move(name), {}, s_.close(span)});
        // an optional argument binds only when the '[' is flush against the command
        if (s_.peek() == '[') {
            tokens.push_back(scan_optional(depth));
        }
    }

    Token scan_param() {
        Span span = s_.mark();
        s_.advance();  // @
        std::string value;
        if (s_.peek() == '!') {
            value += '!';
            s_.advance();
            if (s_.peek() == 'R' || s_.peek() == 'C') {
                value += s_.peek();
                s_.advance();
            }
            return Token{TokenKind::Param, std::move(value), {}, s_.close(span)};
        }
        while (!s_.at_end() && is_letter(s_.peek())) {
            value += s_.peek();
            s_.advance();
        }
        if (s_.peek() == '=') {
            value += '=';
            s_.advance();
            while (!s_.at_end()) {
                char c = s_.peek();
                if (is_blank(c) || c == '{' || c == '}' || c == '@' || c == '%' || c == '\\') {
                    break;
                }
                value += c;
                s_.advance();
            }
        }
        return Token{TokenKind::Param, std::move(value), {}, s_.close(span)};
    }

    bool is_text_char(char c, int depth, char terminator) const {
        if (is_blank(c) || c == '%' || c == '\\' || c == '{' || c == '}' || c == '&') {
            return false;
        }
        if (c == '@' && depth == 0) {
            return false;
        }
        if (c == ']' && terminator == ']') {
            return false;
        }
        return true;
    }

    // A text run absorbs interior blank/comment stretches as single spaces
    // while braces are open; at the top level blanks always split tokens.
    Token scan_text(int depth, char terminator) {
        Span span = s_.mark();
        std::string value;
        while (!s_.at_end()) {
            char c = s_.peek();
            if (is_text_char(c, depth, terminator)) {
                value += c;
                s_.advance();
                continue;
            }
            if ((is_blank(c) || c == '%') && depth > 0) {
                size_t next = s_.skip_blank_from(s_.pos);
                if (next < s_.src.size() && is_text_char(s_.src[next], depth, terminator)) {
                    s_.advance_to(next);
                    value += ' ';
                    continue;
                }
            }
            break;
        }
        return Token{TokenKind::Text, std::move(value), {}, s_.close(span)};
    }
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
    return Tokenizer(source).run();
}

}  // namespace qcirc
