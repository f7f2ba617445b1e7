#pragma once

// Openings (A, f), mine masks x_M and the clue function f_(A,M).

#include "papermines/geometry.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace papermines {

/// Adjacency between the open cells A and the closed cells R \ A, both in
/// row-major order. Entry k of `closed_of_open` lists indices into `closed`.
struct Incidence {
    std::vector<Cell> open;
    std::vector<Cell> closed;
    std::vector<std::vector<std::size_t>> closed_of_open;
    std::vector<std::vector<std::size_t>> open_of_closed;
};

/// Throws std::domain_error if some cell of `open_cells` lies outside R.
Incidence make_incidence(const Geometry& g, const std::vector<Cell>& open_cells);

/// A set of open cells together with their clue values.
///
/// Clues are non-negative but may exceed the closed-neighbour count: such an
/// opening is simply unsatisfiable, which is a verdict solvers report rather
/// than a construction error.
class Opening {
public:
    /// `clues[k]` belongs to `open_cells[k]`. The cells are sorted into
    /// row-major order (clues follow). Throws std::invalid_argument on
    /// duplicates, size mismatch or negative clues; std::domain_error on
    /// cells outside R.
    Opening(Geometry geometry, std::vector<Cell> open_cells, std::vector<int> clues);

    const Geometry& geometry() const noexcept { return geometry_; }
    const std::vector<Cell>& open_cells() const noexcept { return open_cells_; }
    const std::vector<int>& clues() const noexcept { return clues_; }

    std::optional<int> clue(const Cell& c) const;
    std::vector<Cell> closed_cells() const { return complement(geometry_, open_cells_); }

    friend bool operator==(const Opening&, const Opening&) = default;

private:
    Geometry geometry_;
    std::vector<Cell> open_cells_;
    std::vector<int> clues_;
};

/// Characteristic function of a mine set M over the closed cells R \ A.
class MineMask {
public:
    /// Mask over `closed_cells` (row-major); `bits[k]` is 1 iff closed_cells[k] is a mine.
    MineMask(Geometry geometry, std::vector<Cell> closed_cells, std::vector<std::uint8_t> bits);

    /// Builds the mask of `mines` over R \ `open_cells`. Throws
    /// std::invalid_argument if a mine sits on an open cell or outside R.
    static MineMask from_mines(const Geometry& g, const std::vector<Cell>& open_cells,
                               const std::vector<Cell>& mines);

    /// All-empty mask over R \ `open_cells`.
    static MineMask empty(const Geometry& g, const std::vector<Cell>& open_cells);

    const Geometry& geometry() const noexcept { return geometry_; }
    const std::vector<Cell>& closed_cells() const noexcept { return closed_; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

    std::vector<Cell> mines() const;
    std::size_t mine_count() const;
    bool is_mine(const Cell& c) const;

    friend bool operator==(const MineMask&, const MineMask&) = default;

private:
    Geometry geometry_;
    std::vector<Cell> closed_;
    std::vector<std::uint8_t> bits_;
};

/// f(v) = |N(v) ∩ M| for every v in A.
///
/// Throws std::invalid_argument if the mask is not defined on exactly R \ A.
Opening compute_clues(const Geometry& g, const std::vector<Cell>& open_cells, const MineMask& mask);

/// Number of closed neighbours |N(v) ∩ (R \ A)| for each open cell, aligned with the opening.
std::vector<int> closed_degrees(const Opening& o);

/// Open cells whose clue is 0 or equals the closed-neighbour count.
std::vector<Cell> trivial_cells(const Opening& o);

std::vector<Cell> trivial_cells(const Geometry& g, const std::vector<Cell>& open_cells,
                                const MineMask& mask);

/// True iff `mask` satisfies every clue of `o` (mask must be over R \ A of the same geometry).
bool satisfies(const Opening& o, const MineMask& mask);

} // namespace papermines
