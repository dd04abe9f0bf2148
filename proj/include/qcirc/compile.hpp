#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcirc/ast_json.hpp"
#include "qcirc/diagnostics.hpp"
#include "qcirc/element.hpp"
#include "qcirc/render.hpp"
#include "qcirc/svg.hpp"

namespace qcirc {

struct CompileOptions {
    bool fit_labels = false;
    bool corner_only_groups = false;
    double scale = 1.0;
    StyleTable style;
};

struct CompileResult {
    std::optional<CircuitAst> ast;  // absent only on parse failure
    std::vector<Diagnostic> diagnostics;
    std::string svg;  // empty when errors prevented rendering

    bool ok() const {
        return !has_errors(diagnostics);
    }
};

/// Full pipeline: parse, elaborate, validate, and (when error-free) layout
/// and render. Never throws on malformed input; parse failures become a
/// single error diagnostic.
CompileResult compile_source(std::string_view source, const CompileOptions &options = {});

/// Renders a previously exported AST document.
std::string svg_from_ast(const CircuitAst &ast, const CompileOptions &options = {});

}  // namespace qcirc
