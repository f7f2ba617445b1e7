#include "papermines/opening.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace papermines {

Incidence make_incidence(const Geometry& g, const std::vector<Cell>& open_cells)
{
    Incidence inc;
    const auto is_open = open_mask(g, open_cells);

    std::vector<std::size_t> closed_index(g.cell_count(), 0);
    for (std::size_t k = 0; k < is_open.size(); ++k) {
        const Cell c = g.cell_at(k);
        if (is_open[k]) {
            inc.open.push_back(c);
        } else {
            closed_index[k] = inc.closed.size();
            inc.closed.push_back(c);
        }
    }

    inc.closed_of_open.resize(inc.open.size());
    inc.open_of_closed.resize(inc.closed.size());
    for (std::size_t a = 0; a < inc.open.size(); ++a) {
        for (const auto& nb : neighbors(g, inc.open[a])) {
            const auto k = g.index(nb);
            if (is_open[k]) continue;
            inc.closed_of_open[a].push_back(closed_index[k]);
            inc.open_of_closed[closed_index[k]].push_back(a);
        }
    }
    return inc;
}

Opening::Opening(Geometry geometry, std::vector<Cell> open_cells, std::vector<int> clues)
    : geometry_(geometry)
{
    if (open_cells.size() != clues.size())
        throw std::invalid_argument("opening needs exactly one clue per open cell");

    std::vector<std::size_t> order(open_cells.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return open_cells[a] < open_cells[b]; });

    open_cells_.reserve(order.size());
    clues_.reserve(order.size());
    for (auto k : order) {
        const Cell& c = open_cells[k];
        if (!geometry_.contains(c))
            throw std::domain_error("open cell " + to_string(c) + " outside the grid");
        if (!open_cells_.empty() && open_cells_.back() == c)
            throw std::invalid_argument("duplicate open cell " + to_string(c));
        if (clues[k] < 0)
            throw std::invalid_argument("negative clue at " + to_string(c));
        open_cells_.push_back(c);
        clues_.push_back(clues[k]);
    }
}

std::optional<int> Opening::clue(const Cell& c) const
{
    const auto it = std::lower_bound(open_cells_.begin(), open_cells_.end(), c);
    if (it == open_cells_.end() || *it != c) return std::nullopt;
    return clues_[static_cast<std::size_t>(it - open_cells_.begin())];
}

MineMask::MineMask(Geometry geometry, std::vector<Cell> closed_cells, std::vector<std::uint8_t> bits)
    : geometry_(geometry), closed_(std::move(closed_cells)), bits_(std::move(bits))
{
    if (closed_.size() != bits_.size())
        throw std::invalid_argument("mine mask needs one bit per closed cell");
    if (!std::is_sorted(closed_.begin(), closed_.end())
        || std::adjacent_find(closed_.begin(), closed_.end()) != closed_.end())
        throw std::invalid_argument("closed cells must be strictly row-major");
    for (const auto& c : closed_)
        if (!geometry_.contains(c))
            throw std::domain_error("closed cell " + to_string(c) + " outside the grid");
    for (auto b : bits_)
        if (b > 1) throw std::invalid_argument("mine mask bits must be 0 or 1");
}

MineMask MineMask::from_mines(const Geometry& g, const std::vector<Cell>& open_cells,
                              const std::vector<Cell>& mines)
{
    auto closed = complement(g, open_cells);
    std::vector<std::uint8_t> bits(closed.size(), 0);
    for (const auto& m : mines) {
        const auto it = std::lower_bound(closed.begin(), closed.end(), m);
        if (it == closed.end() || *it != m)
            throw std::invalid_argument("mine " + to_string(m) + " is not a closed cell");
        bits[static_cast<std::size_t>(it - closed.begin())] = 1;
    }
    return {g, std::move(closed), std::move(bits)};
}

MineMask MineMask::empty(const Geometry& g, const std::vector<Cell>& open_cells)
{
    auto closed = complement(g, open_cells);
    std::vector<std::uint8_t> bits(closed.size(), 0);
    return {g, std::move(closed), std::move(bits)};
}

std::vector<Cell> MineMask::mines() const
{
    std::vector<Cell> out;
    for (std::size_t k = 0; k < closed_.size(); ++k)
        if (bits_[k]) out.push_back(closed_[k]);
    return out;
}

std::size_t MineMask::mine_count() const
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

bool MineMask::is_mine(const Cell& c) const
{
    const auto it = std::lower_bound(closed_.begin(), closed_.end(), c);
    return it != closed_.end() && *it == c && bits_[static_cast<std::size_t>(it - closed_.begin())];
}

Opening compute_clues(const Geometry& g, const std::vector<Cell>& open_cells, const MineMask& mask)
{
    const auto inc = make_incidence(g, open_cells);
    if (mask.geometry() != g || mask.closed_cells() != inc.closed)
        throw std::invalid_argument("mine mask is not defined on the closed cells of this opening");

    std::vector<int> clues(inc.open.size(), 0);
    for (std::size_t a = 0; a < inc.open.size(); ++a)
        for (auto c : inc.closed_of_open[a])
            clues[a] += mask.bits()[c];
    return {g, inc.open, std::move(clues)};
}

std::vector<int> closed_degrees(const Opening& o)
{
    const auto inc = make_incidence(o.geometry(), o.open_cells());
    std::vector<int> deg;
    deg.reserve(inc.open.size());
    for (const auto& nb : inc.closed_of_open)
        deg.push_back(static_cast<int>(nb.size()));
    return deg;
}

std::vector<Cell> trivial_cells(const Opening& o)
{
    const auto deg = closed_degrees(o);
    std::vector<Cell> out;
    for (std::size_t a = 0; a < deg.size(); ++a)
        if (o.clues()[a] == 0 || o.clues()[a] == deg[a]) out.push_back(o.open_cells()[a]);
    return out;
}

std::vector<Cell> trivial_cells(const Geometry& g, const std::vector<Cell>& open_cells,
                                const MineMask& mask)
{
    return trivial_cells(compute_clues(g, open_cells, mask));
}

bool satisfies(const Opening& o, const MineMask& mask)
{
    if (mask.geometry() != o.geometry()) return false;
    const auto inc = make_incidence(o.geometry(), o.open_cells());
    if (mask.closed_cells() != inc.closed) return false;
    for (std::size_t a = 0; a < inc.open.size(); ++a) {
        int count = 0;
        for (auto c : inc.closed_of_open[a])
            count += mask.bits()[c];
        if (count != o.clues()[a]) return false;
    }
    return true;
}

} // namespace papermines
