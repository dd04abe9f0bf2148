#include <string>

#include "doctest.h"
#include "qcirc/parse.hpp"

using namespace qcirc;

namespace {

std::string cell_text(const RawCell &cell) {
    std::string out;
    for (const auto &t : cell.items) {
        if (!out.empty()) {
            out += " ";
        }
        if (t.kind == TokenKind::Command) {
            out += "\\" + t.value;
        } else if (t.kind == TokenKind::Text) {
            out += t.value;
        } else {
            out += token_kind_name(t.kind);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("parse the basic gate listing") {
    auto parsed = parse("\\Qcircuit @C=1em @R=.7em {\n      & \\gate{X} & \\qw\n}");
    CHECK(parsed.params.col_sep == Length{1.0, Unit::Em});
    CHECK(parsed.params.row_sep == Length{0.7, Unit::Em});
    CHECK(parsed.params.uniform == Uniform::None);
    REQUIRE(parsed.rows.size() == 1);
    REQUIRE(parsed.rows[0].size() == 3);
    CHECK(parsed.rows[0][0].items.empty());
    CHECK(cell_text(parsed.rows[0][1]) == "\\gate group");
    CHECK(cell_text(parsed.rows[0][2]) == "\\qw");
}

TEST_CASE("parse uniform spacing params") {
    auto parsed = parse("\\Qcircuit @C=.7em @R=.4em @! { & \\qw }");
    CHECK(parsed.params.col_sep == Length{0.7, Unit::Em});
    CHECK(parsed.params.row_sep == Length{0.4, Unit::Em});
    CHECK(parsed.params.uniform == Uniform::All);

    CHECK(parse("@!R { }").params.uniform == Uniform::Rows);
    CHECK(parse("@!C { }").params.uniform == Uniform::Cols);
    CHECK(parse("@!R @!C { }").params.uniform == Uniform::All);
    // the grammar permits parameters in any order
    CHECK(parse("@!R @C=2em { }").params.col_sep == Length{2.0, Unit::Em});
}

TEST_CASE("bare bodies get default spacing") {
    auto parsed = parse("\\Qcircuit {\n     a & i \\\\\n     1 & x\n}");
    CHECK(parsed.params.col_sep == Length{1.0, Unit::Em});
    CHECK(parsed.params.row_sep == Length{1.0, Unit::Em});
    REQUIRE(parsed.rows.size() == 2);
    REQUIRE(parsed.rows[0].size() == 2);
    REQUIRE(parsed.rows[1].size() == 2);
    CHECK(cell_text(parsed.rows[0][0]) == "a");
    CHECK(cell_text(parsed.rows[0][1]) == "i");
    CHECK(cell_text(parsed.rows[1][0]) == "1");
    CHECK(cell_text(parsed.rows[1][1]) == "x");

    // the \Qcircuit wrapper itself is optional
    CHECK(parse("{ a & b }").rows[0].size() == 2);
    CHECK(parse("@C=2em { a }").params.col_sep == Length{2.0, Unit::Em});
}

TEST_CASE("math display wrappers are tolerated") {
    auto parsed = parse("\\[ \\Qcircuit @C=1em @R=.7em {\n & \\gate{U} & \\qw\n} \\]");
    REQUIRE(parsed.rows.size() == 1);
    CHECK(parsed.rows[0].size() == 3);
}

TEST_CASE("rows may be ragged before elaboration") {
    auto parsed = parse("{ a & b & c \\\\ d }");
    REQUIRE(parsed.rows.size() == 2);
    CHECK(parsed.rows[0].size() == 3);
    CHECK(parsed.rows[1].size() == 1);
}

TEST_CASE("a trailing row separator adds no empty row") {
    auto parsed = parse("{ a \\\\ b \\\\ }");
    CHECK(parsed.rows.size() == 2);

    // an interior empty row is intentional and stays
    auto with_gap = parse("{ a \\\\ \\\\ b }");
    CHECK(with_gap.rows.size() == 3);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse("\\Qcircuit @C=1em"), ParseError);
    CHECK_THROWS_AS(parse("\\Qcircuit @Z=1em { }"), ParseError);
    CHECK_THROWS_AS(parse("\\Qcircuit @C=abc { }"), ParseError);
    CHECK_THROWS_AS(parse("{ a } trailing"), ParseError);

    auto code_of = [](const char *src) {
        try {
            parse(src);
        } catch (const ParseError &e) {
            return std::string(e.code());
        }
        return std::string("none");
    };
    CHECK(code_of("\\Qcircuit @C=1em") == E103_MISSING_BODY);
    CHECK(code_of("\\Qcircuit @Z=1em { }") == E104_UNKNOWN_PARAM);
    CHECK(code_of("\\Qcircuit @C=abc { }") == E105_BAD_LENGTH);
    CHECK(code_of("{ a } trailing") == E106_TRAILING_CONTENT);
    CHECK(code_of("{ \\gate{X}") == E101_UNBALANCED_BRACE);
}

TEST_CASE("comment transparency") {
    auto canon = [](const ParsedCircuit &p) {
        std::string out = format_length(p.params.col_sep) + "|" + format_length(p.params.row_sep);
        for (const auto &row : p.rows) {
            out += "/";
            for (const auto &cell : row) {
                out += "[" + cell_text(cell) + "]";
            }
        }
        return out;
    };
    std::string plain = "\\Qcircuit @C=1em @R=.7em { & \\gate{X} & \\qw \\\\ & \\qw & \\qw }";
    std::string commented =
        "\\Qcircuit @C=1em % columns\n @R=.7em { & \\gate{X} % the gate\n & \\qw \\\\ % row\n & "
        "\\qw & \\qw }";
    CHECK(canon(parse(plain)) == canon(parse(commented)));
}

TEST_CASE("parse_length forms") {
    CHECK(parse_length(".7em") == Length{0.7, Unit::Em});
    CHECK(parse_length("0em") == Length{0.0, Unit::Em});
    CHECK(parse_length("1.3em") == Length{1.3, Unit::Em});
    CHECK(parse_length("2ex") == Length{2.0, Unit::Ex});
    CHECK(parse_length("-10pt") == Length{-10.0, Unit::Pt});
    CHECK(parse_length("25.4mm") == Length{25.4, Unit::Mm});
    CHECK(parse_length("1in") == Length{1.0, Unit::In});

    CHECK_THROWS_AS(parse_length("1"), ParseError);
    CHECK_THROWS_AS(parse_length("em"), ParseError);
    CHECK_THROWS_AS(parse_length("1.2.3em"), ParseError);
    CHECK_THROWS_AS(parse_length("1qq"), ParseError);
    CHECK_THROWS_AS(parse_length(""), ParseError);
}

TEST_CASE("length unit conversions") {
    CHECK(parse_length("1em").to_em() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(parse_length("10pt").to_em() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(parse_length("1ex").to_em() == doctest::Approx(0.43).epsilon(1e-12));
    CHECK(parse_length("1in").to_em() == doctest::Approx(7.227).epsilon(1e-12));
    CHECK(parse_length("25.4mm").to_em() == doctest::Approx(7.227).epsilon(1e-12));
    CHECK(parse_length("2.54cm").to_em() == doctest::Approx(7.227).epsilon(1e-12));
}

TEST_CASE("length formatting round trips") {
    CHECK(format_length(Length{1.0, Unit::Em}) == "1em");
    CHECK(format_length(Length{0.7, Unit::Em}) == "0.7em");
    CHECK(format_length(Length{0.0, Unit::Em}) == "0em");
    CHECK(format_length(Length{1.3, Unit::Em}) == "1.3em");
    CHECK(parse_length(format_length(Length{0.8, Unit::Ex})) == Length{0.8, Unit::Ex});
}
