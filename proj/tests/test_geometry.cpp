#include "oracle.hpp"

#include "papermines/geometry.hpp"

#include <doctest.h>

#include <algorithm>

using namespace papermines;

namespace {

std::vector<Cell> cells(std::initializer_list<Cell> list)
{
    return list;
}

} // namespace

TEST_CASE("geometry rejects empty grids")
{
    CHECK_THROWS_AS(Geometry::square(0, 3), std::domain_error);
    CHECK_THROWS_AS(Geometry::triangle(2, -1), std::domain_error);
    CHECK_NOTHROW(Geometry::square(1, 1));
}

TEST_CASE("moore neighbourhood clips at the border")
{
    const auto g = Geometry::square(3, 3);
    CHECK(neighbors(g, {1, 1}) == cells({{1, 2}, {2, 1}, {2, 2}}));
    CHECK(neighbors(g, {2, 2}) == cells({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}));
    CHECK_THROWS_AS(neighbors(g, {0, 1}), std::out_of_range);
    CHECK_THROWS_AS(neighbors(g, {3, 4}), std::out_of_range);
}

TEST_CASE("triangle neighbourhood has twelve cells in the interior")
{
    const auto g = Geometry::triangle(5, 5);
    const auto nb = neighbors(g, {3, 3});
    CHECK(nb.size() == 12);
    for (const Cell c : {Cell{3, 5}, Cell{3, 1}, Cell{4, 5}, Cell{4, 1}})
        CHECK(std::find(nb.begin(), nb.end(), c) != nb.end());
    // i+j odd flips the long offsets upward.
    const auto odd = neighbors(g, {3, 2});
    CHECK(std::find(odd.begin(), odd.end(), Cell{2, 4}) != odd.end());
    CHECK(std::find(odd.begin(), odd.end(), Cell{4, 4}) == odd.end());
}

TEST_CASE("neighbours agree with the offset table and are symmetric")
{
    for (auto kind : {Neighborhood::SquareMoore, Neighborhood::Triangle12}) {
        for (int m = 1; m <= 6; ++m) {
            for (int n = 1; n <= 6; ++n) {
                const Geometry g(kind, m, n);
                for (const auto& u : g.cells()) {
                    const auto nb = neighbors(g, u);
                    const auto expected = oracle::neighbors(g, u.i, u.j);
                    REQUIRE(nb.size() == expected.size());
                    for (const auto& v : nb) {
                        CHECK(expected.count({v.i, v.j}) == 1);
                        const auto back = neighbors(g, v);
                        CHECK(std::find(back.begin(), back.end(), u) != back.end());
                    }
                }
            }
        }
    }
}

TEST_CASE("chess pattern sees only orthogonal closed neighbours on square grids")
{
    for (int m = 1; m <= 7; ++m) {
        for (int n = 1; n <= 7; ++n) {
            const auto g = Geometry::square(m, n);
            const auto open = expand_pattern(g, OpenPattern::chess());
            const auto is_open = open_mask(g, open);
            for (const auto& a : open) {
                std::vector<Cell> closed;
                for (const auto& nb : neighbors(g, a))
                    if (!is_open[g.index(nb)]) closed.push_back(nb);
                std::vector<Cell> orth;
                for (const Cell c : {Cell{a.i - 1, a.j}, Cell{a.i, a.j - 1}, Cell{a.i, a.j + 1}, Cell{a.i + 1, a.j}})
                    if (g.contains(c)) orth.push_back(c);
                CHECK(closed == orth);
            }
        }
    }
}

TEST_CASE("expand_pattern")
{
    CHECK(expand_pattern(Geometry::square(2, 2), OpenPattern::chess()) == cells({{1, 1}, {2, 2}}));
    CHECK(expand_pattern(Geometry::square(4, 3), OpenPattern::chess())
          == cells({{1, 1}, {1, 3}, {2, 2}, {3, 1}, {3, 3}, {4, 2}}));
    CHECK(expand_pattern(Geometry::square(2, 5), OpenPattern::top_row())
          == cells({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}));

    SUBCASE("explicit sets are sorted, deduplicated and bounded")
    {
        const auto p = OpenPattern::explicit_cells({{2, 2}, {1, 3}, {2, 2}});
        CHECK(expand_pattern(Geometry::square(3, 3), p) == cells({{1, 3}, {2, 2}}));
        CHECK_THROWS_AS(expand_pattern(Geometry::square(2, 2), OpenPattern::explicit_cells({{3, 1}})),
                        std::domain_error);
    }
    SUBCASE("top row is a square-grid pattern")
    {
        CHECK_THROWS_AS(expand_pattern(Geometry::triangle(2, 4), OpenPattern::top_row()), std::invalid_argument);
    }
}

TEST_CASE("chess cardinalities")
{
    for (int m = 1; m <= 9; ++m) {
        for (int n = 1; n <= 9; ++n) {
            const auto g = Geometry::square(m, n);
            const auto open = expand_pattern(g, OpenPattern::chess());
            const auto closed = complement(g, open);
            CHECK(open.size() + closed.size() == g.cell_count());
            if (oracle::gcd(m + 1, n + 1) == 1) CHECK(open.size() == closed.size());
        }
    }
}

TEST_CASE("classify_pattern recognises the named patterns")
{
    const auto g = Geometry::square(2, 4);
    CHECK(classify_pattern(g, expand_pattern(g, OpenPattern::chess())).kind == PatternKind::Chess);
    CHECK(classify_pattern(g, expand_pattern(g, OpenPattern::top_row())).kind == PatternKind::TopRow);
    const auto other = classify_pattern(g, {{2, 1}, {1, 2}});
    CHECK(other.kind == PatternKind::Explicit);
    CHECK(other.cells == cells({{1, 2}, {2, 1}}));
}
