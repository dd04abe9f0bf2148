#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "qcirc/tokenize.hpp"

using namespace qcirc;

namespace {

std::vector<TokenKind> kinds(const std::vector<Token> &tokens) {
    std::vector<TokenKind> out;
    for (const auto &t : tokens) {
        out.push_back(t.kind);
    }
    return out;
}

// Character-level reference scanner, deliberately independent of the real
// tokenizer: it only understands backslash-words, bracket pairs and plain
// characters, and reports (kind, begin, end) triples.
struct RefPiece {
    char kind;  // 'c' command, 'o' optional, 'g' group, 't' text, '&', 'r' row sep
    size_t begin;
    size_t end;
};

std::vector<RefPiece> reference_scan(std::string_view src) {
    std::vector<RefPiece> out;
    size_t i = 0;
    auto is_letter = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\n' || c == '\t') {
            i++;
        } else if (c == '\\' && i + 1 < src.size() && src[i + 1] == '\\') {
            out.push_back({'r', i, i + 2});
            i += 2;
        } else if (c == '\\') {
            size_t b = i;
            i++;
            while (i < src.size() && is_letter(src[i])) {
                i++;
            }
            if (i == b + 1 && i < src.size()) {
                i++;  // control symbol
            }
            out.push_back({'c', b, i});
        } else if (c == '[') {
            size_t b = i;
            while (i < src.size() && src[i] != ']') {
                i++;
            }
            out.push_back({'o', b, ++i});
        } else if (c == '{') {
            size_t b = i;
            int depth = 0;
            do {
                if (src[i] == '{') {
                    depth++;
                } else if (src[i] == '}') {
                    depth--;
                }
                i++;
            } while (i < src.size() && depth > 0);
            out.push_back({'g', b, i});
        } else if (c == '&') {
            out.push_back({'&', i, i + 1});
            i++;
        } else {
            size_t b = i;
            while (i < src.size() && src[i] != ' ' && src[i] != '\\' && src[i] != '{' &&
                   src[i] != '[' && src[i] != '&' && src[i] != '\n') {
                i++;
            }
            out.push_back({'t', b, i});
        }
    }
    return out;
}

void mark_covered(const Token &token, std::vector<bool> &covered) {
    for (size_t i = token.span.begin; i < token.span.end && i < covered.size(); i++) {
        covered[i] = true;
    }
    for (const auto &child : token.children) {
        mark_covered(child, covered);
    }
}

bool brace_oracle_balanced(std::string_view src) {
    int depth = 0;
    for (char c : src) {
        if (c == '{') {
            depth++;
        } else if (c == '}') {
            depth--;
            if (depth < 0) {
                return false;
            }
        }
    }
    return depth == 0;
}

std::string flatten_braces(const std::vector<Token> &tokens) {
    std::string out;
    for (const auto &t : tokens) {
        if (t.kind == TokenKind::Group) {
            out += "{" + flatten_braces(t.children) + "}";
        }
    }
    return out;
}

}  // namespace

TEST_CASE("tokenize a gate cell") {
    auto tokens = tokenize("& \\gate{X} & \\qw");
    REQUIRE(tokens.size() == 5);
    CHECK(tokens[0].kind == TokenKind::CellSep);
    CHECK(tokens[1].is_command("gate"));
    CHECK(tokens[2].kind == TokenKind::Group);
    REQUIRE(tokens[2].children.size() == 1);
    CHECK(tokens[2].children[0].kind == TokenKind::Text);
    CHECK(tokens[2].children[0].value == "X");
    CHECK(tokens[3].kind == TokenKind::CellSep);
    CHECK(tokens[4].is_command("qw"));
}

TEST_CASE("tokenize empty input") {
    CHECK(tokenize("").empty());
    CHECK(tokenize("   \n  ").empty());
    CHECK(tokenize("% just a comment\n").empty());
}

TEST_CASE("tokenize optional argument") {
    std::string src = "\\qwx[-2]";
    auto tokens = tokenize(src);
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0].is_command("qwx"));
    CHECK(tokens[1].kind == TokenKind::Optional);
    REQUIRE(tokens[1].children.size() == 1);
    CHECK(tokens[1].children[0].value == "-2");

    // cross-check spans against the character-level reference scanner
    auto ref = reference_scan(src);
    REQUIRE(ref.size() == 2);
    CHECK(ref[0].kind == 'c');
    CHECK(tokens[0].span.begin == ref[0].begin);
    CHECK(tokens[0].span.end == ref[0].end);
    CHECK(ref[1].kind == 'o');
    CHECK(tokens[1].span.begin == ref[1].begin);
    CHECK(tokens[1].span.end == ref[1].end);
}

TEST_CASE("reference scanner agrees on kinds and spans") {
    std::string src = "& \\ctrl{1} \\qwx & {/} \\qw \\\\";
    auto tokens = tokenize(src);
    auto ref = reference_scan(src);
    REQUIRE(tokens.size() == ref.size());
    for (size_t i = 0; i < tokens.size(); i++) {
        CHECK(tokens[i].span.begin == ref[i].begin);
        CHECK(tokens[i].span.end == ref[i].end);
    }
}

TEST_CASE("span fidelity: slices reproduce raw text") {
    std::string src =
        "\\Qcircuit @C=1em @R=.7em {\n   & \\gate{H^{\\otimes n}} & \\qwx[-2] & \\qw \\\\\n}";
    auto tokens = tokenize(src);

    // recursive walk: every token's slice matches its kind
    std::vector<const Token *> stack;
    for (const auto &t : tokens) {
        stack.push_back(&t);
    }
    while (!stack.empty()) {
        const Token *t = stack.back();
        stack.pop_back();
        auto raw = slice(src, t->span);
        switch (t->kind) {
            case TokenKind::Command:
                if (t->value == " ") {
                    CHECK(raw.substr(0, 1) == "\\");
                } else {
                    CHECK(raw == "\\" + t->value);
                }
                break;
            case TokenKind::Group:
                CHECK(raw.front() == '{');
                CHECK(raw.back() == '}');
                break;
            case TokenKind::Optional:
                CHECK(raw.front() == '[');
                CHECK(raw.back() == ']');
                break;
            case TokenKind::CellSep:
                CHECK(raw == "&");
                break;
            case TokenKind::RowSep:
                CHECK(raw == "\\\\");
                break;
            case TokenKind::Param:
                CHECK(raw == "@" + t->value);
                break;
            case TokenKind::Text:
                CHECK(!raw.empty());
                break;
        }
        for (const auto &child : t->children) {
            stack.push_back(&child);
        }
    }
}

TEST_CASE("token spans cover all non-blank, non-comment input") {
    std::string src =
        "\\Qcircuit @C=1em { % header\n"
        "  \\lstick{\\ket{\\psi}} & \\multigate{2}{\\ \\mathcal{R}\\ } \\qwx[-1] & \\qw \\\\\n"
        "  a & {/} \\qw\n"
        "}";
    auto tokens = tokenize(src);
    std::vector<bool> covered(src.size(), false);
    for (const auto &t : tokens) {
        mark_covered(t, covered);
    }
    bool in_comment = false;
    for (size_t i = 0; i < src.size(); i++) {
        char c = src[i];
        if (c == '%') {
            in_comment = true;
        }
        if (c == '\n') {
            in_comment = false;
        }
        if (in_comment || c == ' ' || c == '\n' || c == '\t') {
            continue;
        }
        INFO("offset ", i, " char '", std::string(1, c), "'");
        CHECK(covered[i]);
    }
}

TEST_CASE("whitespace collapses inside groups") {
    auto tokens = tokenize("{Syndrome   Measurement}");
    REQUIRE(tokens.size() == 1);
    REQUIRE(tokens[0].children.size() == 1);
    CHECK(tokens[0].children[0].value == "Syndrome Measurement");

    // a comment in the middle of the blank stretch behaves like whitespace
    auto commented = tokenize("{Syndrome % note\n Measurement}");
    REQUIRE(commented.size() == 1);
    REQUIRE(commented[0].children.size() == 1);
    CHECK(commented[0].children[0].value == "Syndrome Measurement");
}

TEST_CASE("control space and row separators") {
    auto tokens = tokenize("{\\ \\mathcal{R}\\ }");
    REQUIRE(tokens.size() == 1);
    const auto &kids = tokens[0].children;
    REQUIRE(kids.size() == 4);
    CHECK(kids[0].is_command(" "));
    CHECK(kids[1].is_command("mathcal"));
    CHECK(kids[2].kind == TokenKind::Group);
    CHECK(kids[3].is_command(" "));

    auto rows = tokenize("a \\\\ b");
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].kind == TokenKind::RowSep);
}

TEST_CASE("params tokenize before the body only") {
    auto tokens = tokenize("@C=1em @R=.7em @!R {x @C=2em}");
    REQUIRE(tokens.size() == 4);
    CHECK(tokens[0].kind == TokenKind::Param);
    CHECK(tokens[0].value == "C=1em");
    CHECK(tokens[1].value == "R=.7em");
    CHECK(tokens[2].value == "!R");
    CHECK(tokens[3].kind == TokenKind::Group);
    // inside the body, '@' is ordinary text
    REQUIRE(tokens[3].children.size() == 1);
    CHECK(tokens[3].children[0].value == "x @C=2em");
}

TEST_CASE("unbalanced braces") {
    CHECK_THROWS_AS(tokenize("{ \\gate{X}"), ParseError);
    CHECK_THROWS_AS(tokenize("a } b"), ParseError);
    CHECK_THROWS_AS(tokenize("\\qwx[1"), ParseError);
    try {
        tokenize("{ \\gate{X}");
    } catch (const ParseError &e) {
        CHECK(std::string(e.code()) == E101_UNBALANCED_BRACE);
        CHECK(e.span().begin == 0);  // points at the unmatched opener
    }
}

TEST_CASE("bare backslash at end of input") {
    CHECK_THROWS_AS(tokenize("\\"), ParseError);
    try {
        tokenize("abc \\");
    } catch (const ParseError &e) {
        CHECK(std::string(e.code()) == E102_BARE_BACKSLASH);
    }
}

TEST_CASE("determinism: identical input, identical tokens") {
    std::string src = "\\Qcircuit @C=1em { & \\gate{X} & \\qw \\\\ & \\qw & \\qw }";
    auto a = tokenize(src);
    auto b = tokenize(src);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); i++) {
        CHECK(a[i].kind == b[i].kind);
        CHECK(a[i].value == b[i].value);
        CHECK(a[i].span.begin == b[i].span.begin);
        CHECK(a[i].span.end == b[i].span.end);
    }
}

TEST_CASE("brace nesting matches a bracket-matching oracle") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> len_dist(0, 24);
    const char alphabet[] = {'{', '}', 'a', ' '};
    std::uniform_int_distribution<int> char_dist(0, 3);

    int balanced_seen = 0;
    for (int trial = 0; trial < 500; trial++) {
        std::string src;
        int len = len_dist(rng);
        for (int i = 0; i < len; i++) {
            src += alphabet[char_dist(rng)];
        }
        bool balanced = brace_oracle_balanced(src);
        if (balanced) {
            balanced_seen++;
            auto tokens = tokenize(src);
            std::string braces;
            for (char c : src) {
                if (c == '{' || c == '}') {
                    braces += c;
                }
            }
            CHECK(flatten_braces(tokens) == braces);
        } else {
            CHECK_THROWS_AS(tokenize(src), ParseError);
        }
    }
    CHECK(balanced_seen > 50);  // the generator actually exercises both sides
}
