#include "qcirc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qcirc {

namespace {

struct Bounds {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
    bool any = false;

    void point(double x, double y) {
        if (!any) {
            x0 = x1 = x;
            y0 = y1 = y;
            any = true;
            return;
        }
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
};

void bound_shape(const Shape &shape, Bounds &bounds, bool fit_labels) {
    struct Visitor {
        Bounds &b;
        bool fit_labels;

        void operator()(const LineShape &line) const {
            b.point(line.a.x, line.a.y);
            b.point(line.b.x, line.b.y);
        }
        void operator()(const RectShape &rect) const {
            b.point(rect.origin.x, rect.origin.y);
            b.point(rect.origin.x + rect.width, rect.origin.y + rect.height);
        }
        void operator()(const CircleShape &circle) const {
            b.point(circle.center.x - circle.radius, circle.center.y - circle.radius);
            b.point(circle.center.x + circle.radius, circle.center.y + circle.radius);
        }
        void operator()(const PathShape &path) const {
            for (const auto &cmd : path.cmds) {
                b.point(cmd.p.x, cmd.p.y);
                if (cmd.op == PathCmd::Op::Cubic) {
                    b.point(cmd.c1.x, cmd.c1.y);
                    b.point(cmd.c2.x, cmd.c2.y);
                } else if (cmd.op == PathCmd::Op::Arc) {
                    // arcs stay within rx/ry of their endpoints
                    b.point(cmd.p.x - cmd.rx, cmd.p.y - cmd.ry);
                    b.point(cmd.p.x + cmd.rx, cmd.p.y + cmd.ry);
                }
            }
        }
        void operator()(const TextShape &text) const {
            if (!fit_labels) {
                return;  // labels have zero layout size; the canvas ignores them
            }
            for (const auto &run : text.runs) {
                b.point(run.pos.x, run.pos.y - run.ascent);
                b.point(run.pos.x + run.width, run.pos.y + run.descent);
            }
        }
    };
    std::visit(Visitor{bounds, fit_labels}, shape.geom);
}

class Emitter {
  public:
    Emitter(const StyleTable &style, double scale, double offset_x, double offset_y)
        : style_(style), k_(style.units_per_em * scale), ox_(offset_x), oy_(offset_y) {}

    std::string fmt(double v) const {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        std::string s{buf};
        if (s == "-0.000") {
            s = "0.000";
        }
        return s;
    }
    std::string ux(double x) const {
        return fmt((x + ox_) * k_);
    }
    std::string uy(double y) const {
        return fmt((y + oy_) * k_);
    }
    std::string ul(double len) const {
        return fmt(len * k_);
    }

    void attr(const char *name, const std::string &value) {
        out_ += " ";
        out_ += name;
        out_ += "=\"" + value + "\"";
    }

    void open(const char *tag, const std::string &cls) {
        out_ += "<";
        out_ += tag;
        if (!cls.empty()) {
            attr("class", cls);
        }
    }

    void dash_attr(DashPattern dash) {
        if (dash == DashPattern::Dashed) {
            attr("stroke-dasharray", ul(style_.dash_on) + " " + ul(style_.dash_off));
        } else if (dash == DashPattern::Dotted) {
            attr("stroke-dasharray", ul(style_.dot_on) + " " + ul(style_.dot_off));
            attr("stroke-linecap", "round");
        }
    }

    void stroke_attrs(DashPattern dash) {
        attr("stroke", style_.foreground);
        attr("stroke-width", ul(style_.stroke_width));
        dash_attr(dash);
    }

    void emit(const Shape &shape) {
        struct Visitor {
            Emitter &e;
            const Shape &shape;

            void operator()(const LineShape &line) const {
                e.open("line", shape.cls);
                e.attr("x1", e.ux(line.a.x));
                e.attr("y1", e.uy(line.a.y));
                e.attr("x2", e.ux(line.b.x));
                e.attr("y2", e.uy(line.b.y));
                e.stroke_attrs(line.dash);
                e.out_ += "/>\n";
            }
            void operator()(const RectShape &rect) const {
                e.open("rect", shape.cls);
                e.attr("x", e.ux(rect.origin.x));
                e.attr("y", e.uy(rect.origin.y));
                e.attr("width", e.ul(rect.width));
                e.attr("height", e.ul(rect.height));
                if (rect.corner_radius > 0.0) {
                    e.attr("rx", e.ul(rect.corner_radius));
                }
                e.attr("fill", rect.filled ? e.style_.background : "none");
                if (rect.stroked) {
                    e.stroke_attrs(rect.dash);
                }
                e.out_ += "/>\n";
            }
            void operator()(const CircleShape &circle) const {
                e.open("circle", shape.cls);
                e.attr("cx", e.ux(circle.center.x));
                e.attr("cy", e.uy(circle.center.y));
                e.attr("r", e.ul(circle.radius));
                if (circle.filled) {
                    e.attr("fill", e.style_.foreground);
                    e.attr("stroke", "none");
                } else {
                    e.attr("fill", e.style_.background);
                    e.stroke_attrs(DashPattern::Solid);
                }
                e.out_ += "/>\n";
            }
            void operator()(const PathShape &path) const {
                e.open("path", shape.cls);
                std::string d;
                for (const auto &cmd : path.cmds) {
                    switch (cmd.op) {
                        case PathCmd::Op::Move:
                            d += "M" + e.ux(cmd.p.x) + "," + e.uy(cmd.p.y) + " ";
                            break;
                        case PathCmd::Op::Line:
                            d += "L" + e.ux(cmd.p.x) + "," + e.uy(cmd.p.y) + " ";
                            break;
                        case PathCmd::Op::Cubic:
                            d += "C" + e.ux(cmd.c1.x) + "," + e.uy(cmd.c1.y) + " " + e.ux(cmd.c2.x) +
                                 "," + e.uy(cmd.c2.y) + " " + e.ux(cmd.p.x) + "," + e.uy(cmd.p.y) +
                                 " ";
                            break;
                        case PathCmd::Op::Arc:
                            d += "A" + e.ul(cmd.rx) + "," + e.ul(cmd.ry) + " 0 " +
                                 std::to_string(cmd.large_arc) + " " + std::to_string(cmd.sweep) +
                                 " " + e.ux(cmd.p.x) + "," + e.uy(cmd.p.y) + " ";
                            break;
                    }
                }
                if (path.closed) {
                    d += "Z";
                } else if (!d.empty()) {
                    d.pop_back();
                }
                e.attr("d", d);
                e.attr("fill", path.filled ? e.style_.background : "none");
                e.stroke_attrs(path.dash);
                e.out_ += "/>\n";
            }
            void operator()(const TextShape &text) const {
                for (const auto &run : text.runs) {
                    e.open("text", shape.cls);
                    e.attr("x", e.ux(run.pos.x));
                    e.attr("y", e.uy(run.pos.y));
                    e.attr("font-size", e.ul(run.size));
                    switch (run.font) {
                        case FontKind::Math:
                            e.attr("font-family", "serif");
                            e.attr("font-style", "italic");
                            break;
                        case FontKind::Upright:
                            e.attr("font-family", "serif");
                            break;
                        case FontKind::Calligraphic:
                            e.attr("font-family", "cursive");
                            e.attr("font-style", "italic");
                            break;
                    }
                    e.out_ += ">" + escape(run.text) + "</text>\n";
                }
            }

            static std::string escape(const std::string &text) {
                std::string out;
                for (char c : text) {
                    switch (c) {
                        case '&': out += "&amp;"; break;
                        case '<': out += "&lt;"; break;
                        case '>': out += "&gt;"; break;
                        default: out += c;
                    }
                }
                return out;
            }
        };
        std::visit(Visitor{*this, shape}, shape.geom);
    }

    std::string &out() {
        return out_;
    }

  private:
    const StyleTable &style_;
    double k_;
    double ox_;
    double oy_;
    std::string out_;
};

}  // namespace

std::string emit_svg(const ShapeList &shapes, const StyleTable &style, const SvgOptions &options) {
    Bounds bounds;
    for (const auto &shape : shapes) {
        bound_shape(shape, bounds, options.fit_labels);
    }
    if (!bounds.any) {
        bounds = Bounds{0, 0, 0, 0, true};
    }

    double margin = style.margin;
    Emitter emitter(style, options.scale, margin - bounds.x0, margin - bounds.y0);
    std::string width = emitter.ul(bounds.x1 - bounds.x0 + 2 * margin);
    std::string height = emitter.ul(bounds.y1 - bounds.y0 + 2 * margin);

    std::string &out = emitter.out();
    out += "<svg";
    emitter.attr("viewBox", "0 0 " + width + " " + height);
    emitter.attr("width", width);
    emitter.attr("height", height);
    emitter.attr("version", "1.1");
    emitter.attr("xmlns", "http://www.w3.org/2000/svg");
    out += ">\n";

    // ascending layer, insertion order within a layer
    std::vector<const Shape *> ordered;
    ordered.reserve(shapes.size());
    for (const auto &shape : shapes) {
        ordered.push_back(&shape);
    }
    std::stable_sort(ordered.begin(), ordered.end(), [](const Shape *a, const Shape *b) {
        return a->layer < b->layer;
    });
    for (const Shape *shape : ordered) {
        emitter.emit(*shape);
    }
    out += "</svg>\n";
    return std::move(emitter.out());
}

}  // namespace qcirc
