#pragma once

#include <cstddef>
#include <vector>

namespace qcirc {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Size of one entry relative to its center line, in em. `above`/`below`
/// split the height so asymmetric labels keep their wire centered.
struct Extent {
    double width = 0.0;
    double above = 0.0;
    double below = 0.0;

    double height() const {
        return above + below;
    }
    bool operator==(const Extent &other) const = default;
};

template <typename T>
class Grid {
  public:
    Grid() = default;
    Grid(size_t rows, size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols) {}

    T &at(size_t r, size_t c) {
        return cells_[r * cols_ + c];
    }
    const T &at(size_t r, size_t c) const {
        return cells_[r * cols_ + c];
    }
    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> cells_;
};

/// Per-cell extents before the grid is solved. Layout extents drive row and
/// column sizes; visual extents remember what zero-size entries (sticks, raw
/// labels) will actually paint.
struct SizedGrid {
    Grid<Extent> layout;
    Grid<Extent> visual;
};

/// Solved geometry: absolute row/column center coordinates (em; y grows
/// downward) plus the sizing results. cell_extent() is the uniformized slot,
/// so re-solving a solved grid is a fixed point.
struct LayoutGrid {
    std::vector<double> col_center;
    std::vector<double> row_center;
    std::vector<double> col_width;
    std::vector<double> row_above;
    std::vector<double> row_below;
    SizedGrid sized;  // the input extents, kept for rendering

    Extent cell_extent(size_t r, size_t c) const {
        return Extent{col_width[c], row_above[r], row_below[r]};
    }
    size_t rows() const {
        return row_center.size();
    }
    size_t cols() const {
        return col_center.size();
    }
};

struct CellRef {
    int row = 0;  // 1-based
    int col = 0;

    bool operator==(const CellRef &other) const = default;
};

struct Segment {
    bool vertical = false;
    bool classical = false;
    CellRef from;
    CellRef to;
    Point p1;  // resolved center of `from`
    Point p2;  // resolved center of `to`
};

struct ConnectorSet {
    std::vector<Segment> segments;
};

}  // namespace qcirc
