#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qcirc/geometry.hpp"

namespace qcirc {

// z-order layers, back to front.
inline constexpr int LAYER_WIRES = 0;
inline constexpr int LAYER_BOXES = 1;
inline constexpr int LAYER_GLYPHS = 2;
inline constexpr int LAYER_TEXT = 3;
inline constexpr int LAYER_GROUPS = 4;

enum class DashPattern { Solid, Dashed, Dotted };

struct LineShape {
    Point a, b;
    DashPattern dash = DashPattern::Solid;
};

struct RectShape {
    Point origin;  // top-left
    double width = 0.0;
    double height = 0.0;
    bool filled = true;  // opaque background so wires stop at the box edge
    bool stroked = true;
    DashPattern dash = DashPattern::Solid;
    double corner_radius = 0.0;
};

struct CircleShape {
    Point center;
    double radius = 0.0;
    bool filled = false;  // open bullets get a background fill + stroke
};

struct PathCmd {
    enum class Op { Move, Line, Cubic, Arc };
    Op op = Op::Move;
    Point p;              // endpoint
    Point c1, c2;         // cubic control points
    double rx = 0.0, ry = 0.0;  // arc radii
    int large_arc = 0;
    int sweep = 0;
};

struct PathShape {
    std::vector<PathCmd> cmds;
    bool closed = false;
    bool filled = false;
    DashPattern dash = DashPattern::Solid;
};

enum class FontKind { Math, Upright, Calligraphic };

/// One positioned run; `pos` is the start of the baseline. The measured box
/// travels with the run so canvas fitting never re-measures.
struct TextRun {
    Point pos;
    double size = 1.0;  // em
    FontKind font = FontKind::Math;
    std::string text;   // UTF-8
    double width = 0.0;
    double ascent = 0.0;
    double descent = 0.0;
};

struct TextShape {
    std::vector<TextRun> runs;
};

struct Shape {
    int layer = 0;
    std::string cls;  // SVG class attribute; "" omits it
    std::variant<LineShape, RectShape, CircleShape, PathShape, TextShape> geom;
};

using ShapeList = std::vector<Shape>;

}  // namespace qcirc
