#include "papermines/geometry.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace papermines {

namespace {

struct Offset {
    int di;
    int dj;
};

constexpr std::array<Offset, 8> kMooreOffsets{{
    {-1, 1}, {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0},
}};

} // namespace

std::string_view to_string(Neighborhood kind)
{
    switch (kind) {
    case Neighborhood::SquareMoore: return "square";
    case Neighborhood::Triangle12: return "triangle";
    }
    return "unknown";
}

Neighborhood parse_neighborhood(std::string_view name)
{
    if (name == "square" || name == "square-moore") return Neighborhood::SquareMoore;
    if (name == "triangle" || name == "triangle-12") return Neighborhood::Triangle12;
    throw std::invalid_argument("unknown geometry kind '" + std::string(name) + "'");
}

std::string to_string(const Cell& c)
{
    return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

Geometry::Geometry(Neighborhood kind, int rows, int cols)
    : kind_(kind), rows_(rows), cols_(cols)
{
    if (rows < 1 || cols < 1)
        throw std::domain_error("grid dimensions must be positive, got "
                                + std::to_string(rows) + "x" + std::to_string(cols));
}

std::vector<Cell> Geometry::cells() const
{
    std::vector<Cell> out;
    out.reserve(cell_count());
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            out.push_back({i, j});
    return out;
}

std::vector<Cell> neighbors(const Geometry& g, const Cell& c)
{
    if (!g.contains(c))
        throw std::out_of_range("cell " + to_string(c) + " outside "
                                + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " grid");

    std::vector<Cell> out;
    auto add = [&](int di, int dj) {
        const Cell n{c.i + di, c.j + dj};
        if (g.contains(n)) out.push_back(n);
    };

    for (const auto& o : kMooreOffsets)
        add(o.di, o.dj);

    if (g.kind() == Neighborhood::Triangle12) {
        const int s = (c.i + c.j) % 2 == 0 ? 1 : -1;
        add(0, 2);
        add(0, -2);
        add(s, 2);
        add(s, -2);
    }

    std::sort(out.begin(), out.end());
    return out;
}

std::string_view to_string(PatternKind kind)
{
    switch (kind) {
    case PatternKind::Chess: return "chess";
    case PatternKind::TopRow: return "top-row";
    case PatternKind::Explicit: return "explicit";
    }
    return "unknown";
}

PatternKind parse_pattern_kind(std::string_view name)
{
    if (name == "chess") return PatternKind::Chess;
    if (name == "top-row" || name == "toprow") return PatternKind::TopRow;
    if (name == "explicit") return PatternKind::Explicit;
    throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

std::vector<Cell> expand_pattern(const Geometry& g, const OpenPattern& p)
{
    std::vector<Cell> out;
    switch (p.kind) {
    case PatternKind::Chess:
        for (const auto& c : g.cells())
            if ((c.i + c.j) % 2 == 0) out.push_back(c);
        break;
    case PatternKind::TopRow:
        if (g.kind() != Neighborhood::SquareMoore)
            throw std::invalid_argument("top-row pattern is only defined on square grids");
        for (int j = 1; j <= g.cols(); ++j)
            out.push_back({1, j});
        break;
    case PatternKind::Explicit:
        out = p.cells;
        for (const auto& c : out)
            if (!g.contains(c))
                throw std::domain_error("explicit open cell " + to_string(c) + " outside the grid");
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        break;
    }
    return out;
}

OpenPattern classify_pattern(const Geometry& g, const std::vector<Cell>& open_cells)
{
    auto sorted = open_cells;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == expand_pattern(g, OpenPattern::chess())) return OpenPattern::chess();
    if (g.kind() == Neighborhood::SquareMoore && sorted == expand_pattern(g, OpenPattern::top_row()))
        return OpenPattern::top_row();
    return OpenPattern::explicit_cells(std::move(sorted));
}

std::vector<bool> open_mask(const Geometry& g, const std::vector<Cell>& open_cells)
{
    std::vector<bool> mask(g.cell_count(), false);
    for (const auto& c : open_cells) {
        if (!g.contains(c))
            throw std::domain_error("open cell " + to_string(c) + " outside the grid");
        mask[g.index(c)] = true;
    }
    return mask;
}

std::vector<Cell> complement(const Geometry& g, const std::vector<Cell>& open_cells)
{
    const auto mask = open_mask(g, open_cells);
    std::vector<Cell> out;
    for (std::size_t k = 0; k < mask.size(); ++k)
        if (!mask[k]) out.push_back(g.cell_at(k));
    return out;
}

} // namespace papermines
