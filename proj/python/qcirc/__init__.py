"""Q-circuit diagram compiler.

Compiles circuit expressions in the Q-circuit macro dialect to SVG and a
versioned AST JSON document. The heavy lifting lives in the `_qcirc`
extension; this package just re-exports it.
"""

from ._qcirc import (
    AST_SCHEMA_VERSION,
    __version__,
    ast_json,
    check,
    svg,
    svg_from_ast_json,
)

__all__ = [
    "AST_SCHEMA_VERSION",
    "__version__",
    "ast_json",
    "check",
    "svg",
    "svg_from_ast_json",
]
