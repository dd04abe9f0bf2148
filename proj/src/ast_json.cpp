#include "qcirc/ast_json.hpp"

#include "json.hpp"

namespace qcirc {

using json = nlohmann::ordered_json;

namespace {

// ---- writing ------------------------------------------------------------

json label_to_doc(const LabelExpr &label);

json label_node_to_doc(const LabelNode &node) {
    json doc;
    switch (node.kind) {
        case LabelNode::Kind::Text:
            doc["kind"] = "text";
            doc["text"] = node.text;
            break;
        case LabelNode::Kind::Symbol:
            doc["kind"] = "symbol";
            doc["name"] = node.text;
            break;
        case LabelNode::Kind::Sub:
            doc["kind"] = "sub";
            doc["content"] = label_to_doc(node.content);
            break;
        case LabelNode::Kind::Sup:
            doc["kind"] = "sup";
            doc["content"] = label_to_doc(node.content);
            break;
        case LabelNode::Kind::Style:
            doc["kind"] = "style";
            doc["style"] = node.style == LabelStyle::Calligraphic ? "calligraphic" : "upright";
            doc["content"] = label_to_doc(node.content);
            break;
        case LabelNode::Kind::Ket:
            doc["kind"] = "ket";
            doc["content"] = label_to_doc(node.content);
            break;
        case LabelNode::Kind::Bra:
            doc["kind"] = "bra";
            doc["content"] = label_to_doc(node.content);
            break;
        case LabelNode::Kind::Rule:
            doc["kind"] = "rule";
            doc["width"] = format_length(node.rule_width);
            doc["height"] = format_length(node.rule_height);
            break;
    }
    return doc;
}

json label_to_doc(const LabelExpr &label) {
    json arr = json::array();
    for (const auto &node : label) {
        arr.push_back(label_node_to_doc(node));
    }
    return arr;
}

struct BodyWriter {
    json operator()(const Empty &) const {
        return {{"kind", "empty"}};
    }
    json operator()(const Gate &g) const {
        return {{"kind", "gate"}, {"label", label_to_doc(g.label)}};
    }
    json operator()(const Targ &) const {
        return {{"kind", "targ"}};
    }
    json operator()(const Swap &) const {
        return {{"kind", "swap"}};
    }
    json operator()(const MultiGateTop &m) const {
        return {{"kind", "multigate"}, {"depth", m.depth}, {"label", label_to_doc(m.label)}};
    }
    json operator()(const Ghost &g) const {
        return {{"kind", "ghost"}, {"label", label_to_doc(g.label)}};
    }
    json operator()(const Meter &) const {
        return {{"kind", "meter"}};
    }
    json operator()(const Measure &m) const {
        return {{"kind", "measure"}, {"label", label_to_doc(m.label)}};
    }
    json operator()(const MeasureTab &m) const {
        return {{"kind", "measure_tab"}, {"label", label_to_doc(m.label)}};
    }
    json operator()(const MeasureD &m) const {
        return {{"kind", "measure_d"}, {"label", label_to_doc(m.label)}};
    }
    json operator()(const MultiMeasureTop &m) const {
        return {
            {"kind", "multimeasure"},
            {"depth", m.depth},
            {"style", m.style == MultiMeasureStyle::D ? "d" : "plain"},
            {"label", label_to_doc(m.label)}};
    }
    json operator()(const Ctrl &c) const {
        return {{"kind", "ctrl"}, {"offset", c.offset}, {"open", c.open}};
    }
    json operator()(const Control &c) const {
        return {{"kind", "control"}, {"open", c.open}};
    }
    json operator()(const Stick &s) const {
        const char *dir = "left";
        switch (s.dir) {
            case StickDir::Left: dir = "left"; break;
            case StickDir::Right: dir = "right"; break;
            case StickDir::Up: dir = "up"; break;
            case StickDir::Down: dir = "down"; break;
        }
        return {{"kind", "stick"}, {"dir", dir}, {"label", label_to_doc(s.label)}};
    }
    json operator()(const Push &p) const {
        return {{"kind", "push"}, {"label", label_to_doc(p.label)}};
    }
    json operator()(const RawLabel &l) const {
        return {{"kind", "label"}, {"label", label_to_doc(l.label)}};
    }
};

json cell_to_doc(const Cell &cell) {
    json doc;
    doc["body"] = std::visit(BodyWriter{}, cell.body);
    json decs = json::array();
    for (const auto &dec : cell.decorations) {
        decs.push_back(json{
            {"kind", dec.kind == WireKind::Horizontal ? "qw" : "qwx"},
            {"offset", dec.offset},
            {"classical", dec.classical}});
    }
    doc["decorations"] = std::move(decs);
    return doc;
}

// ---- reading ------------------------------------------------------------

[[noreturn]] void bad(const std::string &path, const std::string &message) {
    throw SchemaViolation(path, message);
}

const json &field(const json &doc, const char *key, const std::string &path) {
    auto it = doc.find(key);
    if (it == doc.end()) {
        bad(path, std::string("missing field '") + key + "'");
    }
    return *it;
}

std::string expect_string(const json &doc, const std::string &path) {
    if (!doc.is_string()) {
        bad(path, "expected a string");
    }
    return doc.get<std::string>();
}

int expect_int(const json &doc, const std::string &path) {
    if (!doc.is_number_integer()) {
        bad(path, "expected an integer");
    }
    return doc.get<int>();
}

bool expect_bool(const json &doc, const std::string &path) {
    if (!doc.is_boolean()) {
        bad(path, "expected a boolean");
    }
    return doc.get<bool>();
}

Length expect_length(const json &doc, const std::string &path) {
    std::string text = expect_string(doc, path);
    try {
        return parse_length(text);
    } catch (const ParseError &e) {
        bad(path, e.what());
    }
}

LabelExpr doc_to_label(const json &doc, const std::string &path);

LabelNode doc_to_label_node(const json &doc, const std::string &path) {
    if (!doc.is_object()) {
        bad(path, "expected an object");
    }
    std::string kind = expect_string(field(doc, "kind", path), path + "/kind");
    if (kind == "text") {
        return LabelNode::make_text(expect_string(field(doc, "text", path), path + "/text"));
    }
    if (kind == "symbol") {
        return LabelNode::make_symbol(expect_string(field(doc, "name", path), path + "/name"));
    }
    if (kind == "sub" || kind == "sup") {
        return LabelNode::make_script(
            kind == "sub" ? LabelNode::Kind::Sub : LabelNode::Kind::Sup,
            doc_to_label(field(doc, "content", path), path + "/content"));
    }
    if (kind == "style") {
        std::string style = expect_string(field(doc, "style", path), path + "/style");
        if (style != "calligraphic" && style != "upright") {
            bad(path + "/style", "unknown style '" + style + "'");
        }
        return LabelNode::make_style(
            style == "calligraphic" ? LabelStyle::Calligraphic : LabelStyle::Upright,
            doc_to_label(field(doc, "content", path), path + "/content"));
    }
    if (kind == "ket" || kind == "bra") {
        return LabelNode::make_delim(
            kind == "ket" ? LabelNode::Kind::Ket : LabelNode::Kind::Bra,
            doc_to_label(field(doc, "content", path), path + "/content"));
    }
    if (kind == "rule") {
        return LabelNode::make_rule(
            expect_length(field(doc, "width", path), path + "/width"),
            expect_length(field(doc, "height", path), path + "/height"));
    }
    bad(path + "/kind", "unknown label node kind '" + kind + "'");
}

LabelExpr doc_to_label(const json &doc, const std::string &path) {
    if (!doc.is_array()) {
        bad(path, "expected an array");
    }
    LabelExpr label;
    for (size_t i = 0; i < doc.size(); i++) {
        label.push_back(doc_to_label_node(doc[i], path + "/" + std::to_string(i)));
    }
    return label;
}

Element doc_to_body(const json &doc, const std::string &path) {
    if (!doc.is_object()) {
        bad(path, "expected an object");
    }
    std::string kind = expect_string(field(doc, "kind", path), path + "/kind");
    auto label = [&]() {
        return doc_to_label(field(doc, "label", path), path + "/label");
    };
    if (kind == "empty") {
        return Empty{};
    }
    if (kind == "gate") {
        return Gate{label()};
    }
    if (kind == "targ") {
        return Targ{};
    }
    if (kind == "swap") {
        return Swap{};
    }
    if (kind == "multigate") {
        return MultiGateTop{expect_int(field(doc, "depth", path), path + "/depth"), label()};
    }
    if (kind == "ghost") {
        return Ghost{label()};
    }
    if (kind == "meter") {
        return Meter{};
    }
    if (kind == "measure") {
        return Measure{label()};
    }
    if (kind == "measure_tab") {
        return MeasureTab{label()};
    }
    if (kind == "measure_d") {
        return MeasureD{label()};
    }
    if (kind == "multimeasure") {
        std::string style = expect_string(field(doc, "style", path), path + "/style");
        if (style != "plain" && style != "d") {
            bad(path + "/style", "unknown multimeasure style '" + style + "'");
        }
        return MultiMeasureTop{
            expect_int(field(doc, "depth", path), path + "/depth"), label(),
            style == "d" ? MultiMeasureStyle::D : MultiMeasureStyle::Plain};
    }
    if (kind == "ctrl") {
        return Ctrl{
            expect_int(field(doc, "offset", path), path + "/offset"),
            expect_bool(field(doc, "open", path), path + "/open")};
    }
    if (kind == "control") {
        return Control{expect_bool(field(doc, "open", path), path + "/open")};
    }
    if (kind == "stick") {
        std::string dir = expect_string(field(doc, "dir", path), path + "/dir");
        StickDir d;
        if (dir == "left") {
            d = StickDir::Left;
        } else if (dir == "right") {
            d = StickDir::Right;
        } else if (dir == "up") {
            d = StickDir::Up;
        } else if (dir == "down") {
            d = StickDir::Down;
        } else {
            bad(path + "/dir", "unknown stick direction '" + dir + "'");
        }
        return Stick{d, label()};
    }
    if (kind == "push") {
        return Push{label()};
    }
    if (kind == "label") {
        return RawLabel{label()};
    }
    bad(path + "/kind", "unknown element kind '" + kind + "'");
}

Uniform doc_to_uniform(const json &doc, const std::string &path) {
    std::string name = expect_string(doc, path);
    if (name == "none") {
        return Uniform::None;
    }
    if (name == "rows") {
        return Uniform::Rows;
    }
    if (name == "cols") {
        return Uniform::Cols;
    }
    if (name == "all") {
        return Uniform::All;
    }
    bad(path, "unknown uniform mode '" + name + "'");
}

GroupStyle doc_to_group_style(const json &doc, const std::string &path) {
    std::string name = expect_string(doc, path);
    static constexpr std::pair<const char *, GroupStyle> TABLE[] = {
        {"dashed_box", GroupStyle::DashedBox},   {"dotted_box", GroupStyle::DottedBox},
        {"brace_bottom", GroupStyle::BraceBottom}, {"brace_top", GroupStyle::BraceTop},
        {"brace_left", GroupStyle::BraceLeft},   {"brace_right", GroupStyle::BraceRight},
        {"paren_bottom", GroupStyle::ParenBottom}, {"paren_top", GroupStyle::ParenTop},
        {"paren_left", GroupStyle::ParenLeft},   {"paren_right", GroupStyle::ParenRight},
    };
    for (const auto &[key, style] : TABLE) {
        if (name == key) {
            return style;
        }
    }
    bad(path, "unknown group style '" + name + "'");
}

}  // namespace

std::string_view group_style_name(GroupStyle style) {
    switch (style) {
        case GroupStyle::DashedBox: return "dashed_box";
        case GroupStyle::DottedBox: return "dotted_box";
        case GroupStyle::BraceBottom: return "brace_bottom";
        case GroupStyle::BraceTop: return "brace_top";
        case GroupStyle::BraceLeft: return "brace_left";
        case GroupStyle::BraceRight: return "brace_right";
        case GroupStyle::ParenBottom: return "paren_bottom";
        case GroupStyle::ParenTop: return "paren_top";
        case GroupStyle::ParenLeft: return "paren_left";
        case GroupStyle::ParenRight: return "paren_right";
    }
    return "dashed_box";
}

std::string ast_to_json(const CircuitAst &ast) {
    json doc;
    doc["version"] = AST_SCHEMA_VERSION;
    doc["params"] = json{
        {"col_sep", format_length(ast.params.col_sep)},
        {"row_sep", format_length(ast.params.row_sep)},
        {"uniform", std::string(uniform_name(ast.params.uniform))}};
    json rows = json::array();
    for (const auto &row : ast.rows) {
        json cells = json::array();
        for (const auto &cell : row) {
            cells.push_back(cell_to_doc(cell));
        }
        rows.push_back(std::move(cells));
    }
    doc["rows"] = std::move(rows);
    json groups = json::array();
    for (const auto &group : ast.groups) {
        groups.push_back(json{
            {"r1", group.r1},
            {"c1", group.c1},
            {"r2", group.r2},
            {"c2", group.c2},
            {"pad", format_length(group.pad)},
            {"style", std::string(group_style_name(group.style))}});
    }
    doc["groups"] = std::move(groups);
    return doc.dump(2) + "\n";
}

CircuitAst json_to_ast(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        bad("", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        bad("", "expected a JSON object");
    }
    std::string version = expect_string(field(doc, "version", ""), "/version");
    if (version != AST_SCHEMA_VERSION) {
        bad("/version", "unsupported document version '" + version + "'");
    }

    CircuitAst ast;
    const json &params = field(doc, "params", "");
    if (!params.is_object()) {
        bad("/params", "expected an object");
    }
    ast.params.col_sep = expect_length(field(params, "col_sep", "/params"), "/params/col_sep");
    ast.params.row_sep = expect_length(field(params, "row_sep", "/params"), "/params/row_sep");
    ast.params.uniform = doc_to_uniform(field(params, "uniform", "/params"), "/params/uniform");

    const json &rows = field(doc, "rows", "");
    if (!rows.is_array()) {
        bad("/rows", "expected an array");
    }
    size_t cols = 0;
    for (size_t r = 0; r < rows.size(); r++) {
        std::string rpath = "/rows/" + std::to_string(r);
        const json &row_doc = rows[r];
        if (!row_doc.is_array()) {
            bad(rpath, "expected an array");
        }
        if (r == 0) {
            cols = row_doc.size();
        } else if (row_doc.size() != cols) {
            bad(rpath, "rows must all have the same number of cells");
        }
        std::vector<Cell> row;
        for (size_t c = 0; c < row_doc.size(); c++) {
            std::string cpath = rpath + "/" + std::to_string(c);
            const json &cell_doc = row_doc[c];
            if (!cell_doc.is_object()) {
                bad(cpath, "expected an object");
            }
            Cell cell;
            cell.body = doc_to_body(field(cell_doc, "body", cpath), cpath + "/body");
            const json &decs = field(cell_doc, "decorations", cpath);
            if (!decs.is_array()) {
                bad(cpath + "/decorations", "expected an array");
            }
            for (size_t d = 0; d < decs.size(); d++) {
                std::string dpath = cpath + "/decorations/" + std::to_string(d);
                const json &dec_doc = decs[d];
                if (!dec_doc.is_object()) {
                    bad(dpath, "expected an object");
                }
                std::string kind = expect_string(field(dec_doc, "kind", dpath), dpath + "/kind");
                if (kind != "qw" && kind != "qwx") {
                    bad(dpath + "/kind", "unknown decoration kind '" + kind + "'");
                }
                WireDecoration dec;
                dec.kind = kind == "qw" ? WireKind::Horizontal : WireKind::Vertical;
                dec.offset = expect_int(field(dec_doc, "offset", dpath), dpath + "/offset");
                dec.classical = expect_bool(field(dec_doc, "classical", dpath), dpath + "/classical");
                cell.decorations.push_back(dec);
            }
            row.push_back(std::move(cell));
        }
        ast.rows.push_back(std::move(row));
    }

    const json &groups = field(doc, "groups", "");
    if (!groups.is_array()) {
        bad("/groups", "expected an array");
    }
    for (size_t g = 0; g < groups.size(); g++) {
        std::string gpath = "/groups/" + std::to_string(g);
        const json &group_doc = groups[g];
        if (!group_doc.is_object()) {
            bad(gpath, "expected an object");
        }
        GateGroup group;
        group.r1 = expect_int(field(group_doc, "r1", gpath), gpath + "/r1");
        group.c1 = expect_int(field(group_doc, "c1", gpath), gpath + "/c1");
        group.r2 = expect_int(field(group_doc, "r2", gpath), gpath + "/r2");
        group.c2 = expect_int(field(group_doc, "c2", gpath), gpath + "/c2");
        group.pad = expect_length(field(group_doc, "pad", gpath), gpath + "/pad");
        group.style = doc_to_group_style(field(group_doc, "style", gpath), gpath + "/style");
        ast.groups.push_back(group);
    }
    return ast;
}

namespace {

struct BodyEqual {
    const Element &other;

    bool operator()(const Empty &) const {
        return std::holds_alternative<Empty>(other);
    }
    bool operator()(const Gate &g) const {
        const auto *o = std::get_if<Gate>(&other);
        return o && label_equal(g.label, o->label);
    }
    bool operator()(const Targ &) const {
        return std::holds_alternative<Targ>(other);
    }
    bool operator()(const Swap &) const {
        return std::holds_alternative<Swap>(other);
    }
    bool operator()(const MultiGateTop &m) const {
        const auto *o = std::get_if<MultiGateTop>(&other);
        return o && o->depth == m.depth && label_equal(m.label, o->label);
    }
    bool operator()(const Ghost &g) const {
        const auto *o = std::get_if<Ghost>(&other);
        return o && label_equal(g.label, o->label);
    }
    bool operator()(const Meter &) const {
        return std::holds_alternative<Meter>(other);
    }
    bool operator()(const Measure &m) const {
        const auto *o = std::get_if<Measure>(&other);
        return o && label_equal(m.label, o->label);
    }
    bool operator()(const MeasureTab &m) const {
        const auto *o = std::get_if<MeasureTab>(&other);
        return o && label_equal(m.label, o->label);
    }
    bool operator()(const MeasureD &m) const {
        const auto *o = std::get_if<MeasureD>(&other);
        return o && label_equal(m.label, o->label);
    }
    bool operator()(const MultiMeasureTop &m) const {
        const auto *o = std::get_if<MultiMeasureTop>(&other);
        return o && o->depth == m.depth && o->style == m.style && label_equal(m.label, o->label);
    }
    bool operator()(const Ctrl &c) const {
        const auto *o = std::get_if<Ctrl>(&other);
        return o && o->offset == c.offset && o->open == c.open;
    }
    bool operator()(const Control &c) const {
        const auto *o = std::get_if<Control>(&other);
        return o && o->open == c.open;
    }
    bool operator()(const Stick &s) const {
        const auto *o = std::get_if<Stick>(&other);
        return o && o->dir == s.dir && label_equal(s.label, o->label);
    }
    bool operator()(const Push &p) const {
        const auto *o = std::get_if<Push>(&other);
        return o && label_equal(p.label, o->label);
    }
    bool operator()(const RawLabel &l) const {
        const auto *o = std::get_if<RawLabel>(&other);
        return o && label_equal(l.label, o->label);
    }
};

}  // namespace

bool ast_equal(const CircuitAst &a, const CircuitAst &b) {
    if (!(a.params == b.params) || a.rows.size() != b.rows.size() ||
        a.groups.size() != b.groups.size()) {
        return false;
    }
    for (size_t r = 0; r < a.rows.size(); r++) {
        if (a.rows[r].size() != b.rows[r].size()) {
            return false;
        }
        for (size_t c = 0; c < a.rows[r].size(); c++) {
            const Cell &ca = a.rows[r][c];
            const Cell &cb = b.rows[r][c];
            if (!std::visit(BodyEqual{cb.body}, ca.body)) {
                return false;
            }
            if (ca.decorations.size() != cb.decorations.size()) {
                return false;
            }
            for (size_t d = 0; d < ca.decorations.size(); d++) {
                const auto &da = ca.decorations[d];
                const auto &db = cb.decorations[d];
                if (da.kind != db.kind || da.offset != db.offset || da.classical != db.classical) {
                    return false;
                }
            }
        }
    }
    for (size_t g = 0; g < a.groups.size(); g++) {
        const auto &ga = a.groups[g];
        const auto &gb = b.groups[g];
        if (ga.r1 != gb.r1 || ga.c1 != gb.c1 || ga.r2 != gb.r2 || ga.c2 != gb.c2 ||
            !(ga.pad == gb.pad) || ga.style != gb.style) {
            return false;
        }
    }
    return true;
}

}  // namespace qcirc
