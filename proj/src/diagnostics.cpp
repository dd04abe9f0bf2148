#include "qcirc/diagnostics.hpp"

#include <algorithm>

namespace qcirc {

void sort_diagnostics(std::vector<Diagnostic> &diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic &a, const Diagnostic &b) {
        if (a.span.begin != b.span.begin) {
            return a.span.begin < b.span.begin;
        }
        return a.code < b.code;
    });
}

std::string format_diagnostic(const Diagnostic &diag, const std::string &file) {
    std::string out = file;
    out += ":" + std::to_string(diag.span.line);
    out += ":" + std::to_string(diag.span.column);
    out += ": " + diag.code + ": " + diag.message;
    return out;
}

}  // namespace qcirc
