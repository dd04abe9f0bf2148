#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qcirc/element.hpp"

namespace qcirc {

inline constexpr const char *AST_SCHEMA_VERSION = "qcirc-ast/1";

/// Malformed AST document; `path()` is a JSON-pointer-style location.
class SchemaViolation : public std::runtime_error {
  public:
    SchemaViolation(std::string path, const std::string &message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

    const std::string &path() const {
        return path_;
    }

  private:
    std::string path_;
};

/// Canonical serialized form: stable key order, version-tagged, spans
/// excluded. Two serializations of equal ASTs are byte-identical.
std::string ast_to_json(const CircuitAst &ast);

CircuitAst json_to_ast(std::string_view text);

}  // namespace qcirc
