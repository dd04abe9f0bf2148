#include "qcirc/compile.hpp"

#include "qcirc/elaborate.hpp"
#include "qcirc/layout.hpp"
#include "qcirc/parse.hpp"
#include "qcirc/validate.hpp"

namespace qcirc {

std::string svg_from_ast(const CircuitAst &ast, const CompileOptions &options) {
    const FontMetrics &metrics = default_metrics();
    SizedGrid sized = size_elements(ast, metrics, options.style);
    LayoutGrid layout = solve_grid(sized, ast.params);
    ConnectorSet connectors = place_connectors(ast, layout);
    RenderOptions render_options{options.corner_only_groups};
    ShapeList shapes = render_shapes(ast, layout, connectors, options.style, render_options);
    SvgOptions svg_options{options.scale, options.fit_labels};
    return emit_svg(shapes, options.style, svg_options);
}

CompileResult compile_source(std::string_view source, const CompileOptions &options) {
    CompileResult result;

    ParsedCircuit parsed;
    try {
        parsed = parse(source);
    } catch (const ParseError &e) {
        result.diagnostics.push_back(e.to_diagnostic());
        return result;
    }

    ElaborateResult elaborated = elaborate(parsed);
    result.diagnostics = std::move(elaborated.diagnostics);
    auto validation = validate(elaborated.ast);
    result.diagnostics.insert(result.diagnostics.end(), validation.begin(), validation.end());
    result.ast = std::move(elaborated.ast);

    if (!has_errors(result.diagnostics)) {
        const FontMetrics &metrics = default_metrics();
        SizedGrid sized = size_elements(*result.ast, metrics, options.style, &result.diagnostics);
        LayoutGrid layout = solve_grid(sized, result.ast->params);
        ConnectorSet connectors = place_connectors(*result.ast, layout);
        RenderOptions render_options{options.corner_only_groups};
        ShapeList shapes =
            render_shapes(*result.ast, layout, connectors, options.style, render_options);
        SvgOptions svg_options{options.scale, options.fit_labels};
        result.svg = emit_svg(shapes, options.style, svg_options);
    }

    sort_diagnostics(result.diagnostics);
    return result;
}

}  // namespace qcirc
