#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qcirc/span.hpp"

namespace qcirc {

enum class Severity { Warning, Error };

// Validation codes.
inline constexpr const char *E001_LEFT_EDGE = "E001";        // leftward element in column 1
inline constexpr const char *E002_OFFSET_BOUNDS = "E002";    // wire/control offset leaves grid
inline constexpr const char *E003_DECORATION_FIRST = "E003"; // wire decoration precedes body
inline constexpr const char *E004_UNKNOWN_COMMAND = "E004";  // unknown top-level command
inline constexpr const char *E005_DEPTH_BOUNDS = "E005";     // multigate depth past last row
inline constexpr const char *E006_DUPLICATE_BODY = "E006";   // two body elements in one cell
inline constexpr const char *E007_BAD_OFFSET_ARG = "E007";   // offset/depth argument invalid
inline constexpr const char *W001_ORPHAN_GHOST = "W001";
inline constexpr const char *W002_GROUP_BOUNDS = "W002";
inline constexpr const char *W003_GHOST_WIDTH = "W003";
inline constexpr const char *W004_GROUP_STYLE = "W004";
inline constexpr const char *W101_UNKNOWN_SYMBOL = "W101";

// Parse-time codes (fatal; reported through ParseError).
inline constexpr const char *E101_UNBALANCED_BRACE = "E101";
inline constexpr const char *E102_BARE_BACKSLASH = "E102";
inline constexpr const char *E103_MISSING_BODY = "E103";
inline constexpr const char *E104_UNKNOWN_PARAM = "E104";
inline constexpr const char *E105_BAD_LENGTH = "E105";
inline constexpr const char *E106_TRAILING_CONTENT = "E106";

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    Span span;
    std::string message;
    // Grid coordinates when the diagnostic refers to a cell (1-based; 0 = n/a).
    int row = 0;
    int col = 0;
};

inline bool has_errors(const std::vector<Diagnostic> &diags) {
    for (const auto &d : diags) {
        if (d.severity == Severity::Error) {
            return true;
        }
    }
    return false;
}

/// Row-major source order: by byte offset, then code for stability.
void sort_diagnostics(std::vector<Diagnostic> &diags);

/// `file:line:col: E###: message`
std::string format_diagnostic(const Diagnostic &diag, const std::string &file);

/// Fatal front-end failure (unbalanced braces, missing body, bad lengths).
/// Pipelines convert these into a single error Diagnostic.
class ParseError : public std::runtime_error {
  public:
    ParseError(const char *code, Span span, const std::string &message)
        : std::runtime_error(message), code_(code), span_(span) {}

    const char *code() const {
        return code_;
    }
    const Span &span() const {
        return span_;
    }

    Diagnostic to_diagnostic() const {
        return Diagnostic{Severity::Error, code_, span_, what()};
    }

  private:
    const char *code_;
    Span span_;
};

}  // namespace qcirc
