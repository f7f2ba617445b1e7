#pragma once

// Grid geometries, neighbourhood rules and open-cell patterns.
//
// Coordinates are 1-based throughout: cell (i, j) is row i, column j of an
// m x n rectangle R = {(i, j) : 1 <= i <= m, 1 <= j <= n}. Any ordered list
// of cells produced here is row-major.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace papermines {

enum class Neighborhood {
    SquareMoore, ///< the 8 surrounding cells of a square grid
    Triangle12,  ///< triangles sharing at least one vertex on a triangle tiling
};

std::string_view to_string(Neighborhood kind);
Neighborhood parse_neighborhood(std::string_view name);

struct Cell {
    int i = 0; ///< row, 1-based
    int j = 0; ///< column, 1-based

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

class Geometry {
public:
    /// Throws std::domain_error unless rows >= 1 and cols >= 1.
    Geometry(Neighborhood kind, int rows, int cols);

    static Geometry square(int rows, int cols) { return {Neighborhood::SquareMoore, rows, cols}; }
    static Geometry triangle(int rows, int cols) { return {Neighborhood::Triangle12, rows, cols}; }

    Neighborhood kind() const noexcept { return kind_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::size_t cell_count() const noexcept
    {
        return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_);
    }

    bool contains(const Cell& c) const noexcept
    {
        return c.i >= 1 && c.i <= rows_ && c.j >= 1 && c.j <= cols_;
    }

    /// Row-major linear index, 0-based. Precondition: contains(c).
    std::size_t index(const Cell& c) const noexcept
    {
        return static_cast<std::size_t>(c.i - 1) * static_cast<std::size_t>(cols_)
               + static_cast<std::size_t>(c.j - 1);
    }

    Cell cell_at(std::size_t index) const noexcept
    {
        const auto n = static_cast<std::size_t>(cols_);
        return {static_cast<int>(index / n) + 1, static_cast<int>(index % n) + 1};
    }

    /// All cells of R in row-major order.
    std::vector<Cell> cells() const;

    friend bool operator==(const Geometry&, const Geometry&) = default;

private:
    Neighborhood kind_;
    int rows_;
    int cols_;
};

/// Cells adjacent to `c`, clipped to R, in row-major order.
///
/// SquareMoore uses the 8 Moore offsets. Triangle12 uses 12 offsets:
/// (0,+-1), (+-1,0), the four diagonals, (0,+-2) and (s,+-2) where
/// s = (-1)^(i+j). Cells with i+j even are drawn as upward triangles.
///
/// Throws std::out_of_range if `c` is not in R.
std::vector<Cell> neighbors(const Geometry& g, const Cell& c);

enum class PatternKind {
    Chess,   ///< A = {(i,j) : i+j even}
    TopRow,  ///< A = {(1,j)}; SquareMoore only
    Explicit,
};

std::string_view to_string(PatternKind kind);
PatternKind parse_pattern_kind(std::string_view name);

struct OpenPattern {
    PatternKind kind = PatternKind::Chess;
    std::vector<Cell> cells; ///< only used by Explicit

    static OpenPattern chess() { return {PatternKind::Chess, {}}; }
    static OpenPattern top_row() { return {PatternKind::TopRow, {}}; }
    static OpenPattern explicit_cells(std::vector<Cell> cells)
    {
        return {PatternKind::Explicit, std::move(cells)};
    }

    friend bool operator==(const OpenPattern&, const OpenPattern&) = default;
};

/// The open set A in canonical row-major order, without duplicates.
///
/// Throws std::domain_error for an Explicit cell outside R, and
/// std::invalid_argument for TopRow on a non-square geometry.
std::vector<Cell> expand_pattern(const Geometry& g, const OpenPattern& p);

/// Recognises Chess and TopRow open sets; anything else becomes Explicit.
OpenPattern classify_pattern(const Geometry& g, const std::vector<Cell>& open_cells);

/// Membership table for an open set: `result[g.index(c)]` is true iff c is open.
std::vector<bool> open_mask(const Geometry& g, const std::vector<Cell>& open_cells);

/// R \ A in row-major order.
std::vector<Cell> complement(const Geometry& g, const std::vector<Cell>& open_cells);

} // namespace papermines
