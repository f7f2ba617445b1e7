#include "oracle.hpp"

#include "papermines/linalg.hpp"
#include "papermines/opening.hpp"

#include <doctest.h>

#include <random>

using namespace papermines;

namespace {

ClueMatrix chess_matrix(int m, int n)
{
    const auto g = Geometry::square(m, n);
    return build_clue_matrix(g, expand_pattern(g, OpenPattern::chess()));
}

ClueMatrix top_row_matrix(int n)
{
    const auto g = Geometry::square(2, n);
    return build_clue_matrix(g, expand_pattern(g, OpenPattern::top_row()));
}

std::vector<std::vector<mpq_class>> to_rational(const IntMatrix& a)
{
    std::vector<std::vector<mpq_class>> out(a.rows(), std::vector<mpq_class>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out[r][c] = static_cast<long>(a(r, c));
    return out;
}

bool proportional(const RationalVector& v, const std::vector<long>& w)
{
    REQUIRE(v.size() == w.size());
    mpq_class ratio = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (w[k] == 0) {
            if (v[k] != 0) return false;
            continue;
        }
        const mpq_class r = v[k] / mpq_class(w[k]);
        if (ratio == 0) ratio = r;
        else if (r != ratio) return false;
    }
    return ratio != 0;
}

} // namespace

TEST_CASE("clue matrix construction")
{
    const auto e22 = chess_matrix(2, 2);
    CHECK(e22.entries == IntMatrix(2, 2, {1, 1, 1, 1}));
    CHECK(e22.rows == std::vector<Cell>{{1, 1}, {2, 2}});
    CHECK(e22.cols == std::vector<Cell>{{1, 2}, {2, 1}});

    for (int n = 1; n <= 8; ++n)
        CHECK(top_row_matrix(n).entries == tridiagonal_ones(static_cast<std::size_t>(n)));

    const auto e43 = chess_matrix(4, 3);
    REQUIRE(e43.square());
    // Row of (2,2): ones at (1,2), (2,1), (2,3), (3,2).
    const auto row = e43.entries.row(2);
    const std::vector<long long> expected{1, 1, 1, 1, 0, 0};
    CHECK(std::vector<long long>(row.begin(), row.end()) == expected);
    CHECK(e43.cols == std::vector<Cell>{{1, 2}, {2, 1}, {2, 3}, {3, 2}, {4, 1}, {4, 3}});

    for (int m = 1; m <= 6; ++m)
        for (int n = 2; n <= 6; ++n) {
            const auto e = chess_matrix(m, n);
            for (std::size_t r = 0; r < e.rows.size(); ++r) {
                long long ones = 0;
                for (auto v : e.entries.row(r))
                    ones += v;
                CHECK(ones >= 1);
                CHECK(ones <= 4);
                if (m >= 2) CHECK(ones >= 2);
            }
        }
}

TEST_CASE("exact rank")
{
    CHECK(exact_rank(chess_matrix(2, 2)) == 1);
    CHECK(exact_rank(chess_matrix(4, 3)) == 6);
    CHECK(exact_rank(top_row_matrix(5)) == 4);
    CHECK(exact_rank(IntMatrix(0, 0)) == 0);
    CHECK(exact_rank(IntMatrix(3, 2)) == 0);

    SUBCASE("agrees with rational Gaussian elimination on random integer matrices")
    {
        std::mt19937_64 rng(20240611);
        std::uniform_int_distribution<int> shape(1, 9);
        std::uniform_int_distribution<int> entry(-3, 3);
        std::bernoulli_distribution sparse(0.4);
        for (int trial = 0; trial < 300; ++trial) {
            IntMatrix a(static_cast<std::size_t>(shape(rng)), static_cast<std::size_t>(shape(rng)));
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t c = 0; c < a.cols(); ++c)
                    a(r, c) = sparse(rng) ? entry(rng) : 0;
            CHECK(exact_rank(a) == oracle::rational_rank(to_rational(a)));
        }
    }
}

TEST_CASE("determinant of the tridiagonal all-ones matrix follows the recurrence")
{
    for (int n = 1; n <= 40; ++n) {
        const auto det = exact_determinant(tridiagonal_ones(static_cast<std::size_t>(n)));
        CHECK(det == static_cast<long>(oracle::tridiagonal_det(n)));
        CHECK((det == 0) == (n % 3 == 2));
    }
    CHECK(exact_determinant(IntMatrix(2, 2, {0, 1, 1, 0})) == -1);
    CHECK(exact_determinant(IntMatrix(3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 2})) == 6);
    CHECK_THROWS_AS(exact_determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("exact solve")
{
    SUBCASE("the 4x3 example clues give its mine set")
    {
        const auto e = chess_matrix(4, 3);
        const std::vector<int> f{1, 2, 2, 1, 1, 1};
        const auto out = exact_solve(e, f);
        const auto* x = std::get_if<RationalVector>(&out);
        REQUIRE(x);
        std::vector<Cell> mines;
        for (std::size_t c = 0; c < x->size(); ++c) {
            CHECK(((*x)[c] == 0 || (*x)[c] == 1));
            if ((*x)[c] == 1) mines.push_back(e.cols[c]);
        }
        CHECK(mines == std::vector<Cell>{{1, 2}, {2, 3}, {4, 1}});
    }
    SUBCASE("zero right-hand side")
    {
        const auto e = chess_matrix(4, 3);
        const auto out = exact_solve(e, std::vector<int>(6, 0));
        REQUIRE(std::holds_alternative<RationalVector>(out));
        for (const auto& v : std::get<RationalVector>(out))
            CHECK(v == 0);
    }
    SUBCASE("rank-deficient consistent system")
    {
        const auto out = exact_solve(chess_matrix(2, 2), std::vector<int>{1, 1});
        REQUIRE(std::holds_alternative<Underdetermined>(out));
        CHECK(std::get<Underdetermined>(out).kernel_dimension == 1);
    }
    SUBCASE("inconsistent system")
    {
        CHECK(std::holds_alternative<Inconsistent>(exact_solve(chess_matrix(2, 2), std::vector<int>{1, 2})));
        // Overdetermined: 2 equations in 1 unknown.
        const IntMatrix a(2, 1, {1, 1});
        CHECK(std::holds_alternative<Inconsistent>(exact_solve(a, std::vector<long long>{1, 0})));
        const auto ok = exact_solve(a, std::vector<long long>{3, 3});
        REQUIRE(std::holds_alternative<RationalVector>(ok));
        CHECK(std::get<RationalVector>(ok)[0] == 3);
    }
    SUBCASE("fractional solutions stay exact")
    {
        const IntMatrix a(2, 2, {2, 1, 1, 3});
        const auto out = exact_solve(a, std::vector<long long>{1, 0});
        REQUIRE(std::holds_alternative<RationalVector>(out));
        const auto& x = std::get<RationalVector>(out);
        CHECK(x[0] == mpq_class(3, 5));
        CHECK(x[1] == mpq_class(-1, 5));
    }
    CHECK_THROWS_AS(exact_solve(IntMatrix(2, 2), std::vector<long long>{1}), std::invalid_argument);
}

TEST_CASE("solve inverts E x for 0/1 vectors on full-rank matrices")
{
    std::mt19937_64 rng(7);
    for (int m = 1; m <= 8; ++m) {
        for (int n = m; n <= 8; ++n) {
            if (oracle::gcd(m + 1, n + 1) != 1) continue;
            const auto e = chess_matrix(m, n);
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<long long> x(e.cols.size());
                for (auto& v : x)
                    v = static_cast<long long>(rng() & 1U);
                const auto f = multiply(e.entries, x);
                const auto out = exact_solve(e.entries, f);
                REQUIRE(std::holds_alternative<RationalVector>(out));
                const auto& y = std::get<RationalVector>(out);
                for (std::size_t c = 0; c < x.size(); ++c)
                    CHECK(y[c] == static_cast<long>(x[c]));
            }
        }
    }
}

TEST_CASE("kernel basis")
{
    CHECK(kernel_basis(chess_matrix(4, 3)).empty());

    const auto k22 = kernel_basis(chess_matrix(2, 2));
    REQUIRE(k22.size() == 1);
    CHECK(proportional(k22[0], {1, -1}));

    const auto k25 = kernel_basis(top_row_matrix(5));
    REQUIRE(k25.size() == 1);
    CHECK(proportional(k25[0], {1, -1, 0, 1, -1}));

    SUBCASE("dimension is columns minus rank and vectors are annihilated")
    {
        for (int m = 1; m <= 6; ++m) {
            for (int n = m; n <= 6; ++n) {
                const auto e = chess_matrix(m, n);
                const auto basis = kernel_basis(e);
                CHECK(basis.size() == e.cols.size() - exact_rank(e));
                for (const auto& v : basis)
                    for (const auto& y : multiply(e.entries, v))
                        CHECK(y == 0);
                if (!basis.empty()) {
                    std::vector<std::vector<mpq_class>> rows(basis.begin(), basis.end());
                    CHECK(oracle::rational_rank(rows) == basis.size());
                }
            }
        }
    }
}
