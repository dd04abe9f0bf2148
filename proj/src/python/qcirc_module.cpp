#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcirc/compile.hpp"

namespace py = pybind11;

namespace {

qcirc::CompileOptions make_options(bool fit_labels, bool corner_only_groups, double scale) {
    qcirc::CompileOptions options;
    options.fit_labels = fit_labels;
    options.corner_only_groups = corner_only_groups;
    options.scale = scale;
    return options;
}

py::list diagnostics_to_list(const std::vector<qcirc::Diagnostic> &diags) {
    py::list out;
    for (const auto &d : diags) {
        py::dict entry;
        entry["severity"] = d.severity == qcirc::Severity::Error ? "error" : "warning";
        entry["code"] = d.code;
        entry["line"] = d.span.line;
        entry["column"] = d.span.column;
        entry["message"] = d.message;
        entry["row"] = d.row;
        entry["col"] = d.col;
        out.append(entry);
    }
    return out;
}

[[noreturn]] void raise_errors(const qcirc::CompileResult &result) {
    std::string message;
    for (const auto &d : result.diagnostics) {
        if (d.severity == qcirc::Severity::Error) {
            if (!message.empty()) {
                message += "\n";
            }
            message += qcirc::format_diagnostic(d, "<source>");
        }
    }
    throw py::value_error(message);
}

}  // namespace

PYBIND11_MODULE(_qcirc, m) {
    m.doc() = "Q-circuit diagram compiler";
    m.attr("__version__") = "0.1.0";
    m.attr("AST_SCHEMA_VERSION") = qcirc::AST_SCHEMA_VERSION;

    m.def(
        "svg",
        [](const std::string &source, bool fit_labels, bool corner_only_groups, double scale) {
            auto result = qcirc::compile_source(source, make_options(fit_labels, corner_only_groups, scale));
            if (!result.ok()) {
                raise_errors(result);
            }
            return result.svg;
        },
        py::arg("source"), py::arg("fit_labels") = false, py::arg("corner_only_groups") = false,
        py::arg("scale") = 1.0,
        "Compile a circuit expression to an SVG document. Raises ValueError on errors.");

    m.def(
        "ast_json",
        [](const std::string &source) {
            auto result = qcirc::compile_source(source);
            if (!result.ast) {
                raise_errors(result);
            }
            return qcirc::ast_to_json(*result.ast);
        },
        py::arg("source"),
        "Compile a circuit expression to its canonical AST JSON document.");

    m.def(
        "check",
        [](const std::string &source) {
            auto result = qcirc::compile_source(source);
            return diagnostics_to_list(result.diagnostics);
        },
        py::arg("source"),
        "Validate a circuit expression; returns the diagnostic list (possibly empty).");

    m.def(
        "svg_from_ast_json",
        [](const std::string &text, bool fit_labels, bool corner_only_groups, double scale) {
            qcirc::CircuitAst ast = qcirc::json_to_ast(text);
            return qcirc::svg_from_ast(ast, make_options(fit_labels, corner_only_groups, scale));
        },
        py::arg("ast_json"), py::arg("fit_labels") = false, py::arg("corner_only_groups") = false,
        py::arg("scale") = 1.0,
        "Render a previously exported AST JSON document to SVG.");
}
