#include "oracle.hpp"

#include "papermines/linalg.hpp"
#include "papermines/spectrum.hpp"

#include <doctest.h>

#include <cmath>

using namespace papermines;

TEST_CASE("closed-form predicates")
{
    CHECK(chess_uniqueness_predicate(4, 3));
    CHECK(chess_uniqueness_predicate(5, 6));
    CHECK_FALSE(chess_uniqueness_predicate(2, 2));
    CHECK_FALSE(chess_uniqueness_predicate(5, 5));

    CHECK(two_by_n_uniqueness_predicate(3));
    CHECK_FALSE(two_by_n_uniqueness_predicate(5));
    CHECK_FALSE(two_by_n_uniqueness_predicate(2));
    CHECK(exact_rank(tridiagonal_ones(2)) == 1);

    CHECK(triangle_uniqueness_predicate(5, 5));
    CHECK_FALSE(triangle_uniqueness_predicate(3, 5));
    CHECK(triangle_uniqueness_predicate(4, 6));

    CHECK_THROWS_AS(chess_uniqueness_predicate(0, 3), std::domain_error);
    CHECK_THROWS_AS(triangle_uniqueness_predicate(2, 0), std::domain_error);
}

TEST_CASE("two-by-n predicate matches the tridiagonal rank")
{
    for (int n = 1; n <= 30; ++n) {
        const auto t = tridiagonal_ones(static_cast<std::size_t>(n));
        CHECK(two_by_n_uniqueness_predicate(n) == (exact_rank(t) == static_cast<std::size_t>(n)));
    }
}

TEST_CASE("chess spectrum zero witnesses")
{
    const auto s22 = chess_spectrum(2, 2);
    CHECK(s22.has_zero);
    CHECK(s22.zero_witnesses == std::vector<IndexPair>{{1, 2}, {2, 1}});
    CHECK(s22.eigenvalue_descriptors.size() == 4);
    CHECK_FALSE(s22.min_abs_multiplier.has_value());

    CHECK_FALSE(chess_spectrum(4, 3).has_zero);

    const auto s53 = chess_spectrum(5, 3);
    CHECK(s53.has_zero);
    CHECK(std::find(s53.zero_witnesses.begin(), s53.zero_witnesses.end(), IndexPair{3, 2})
          != s53.zero_witnesses.end());
}

TEST_CASE("integer zero test agrees with the cosine eigenvalues")
{
    for (int m = 1; m <= 25; ++m) {
        for (int n = 1; n <= 25; ++n) {
            const auto s = chess_spectrum(m, n);
            CHECK(s.has_zero == !s.zero_witnesses.empty());
            CHECK(s.has_zero == !chess_uniqueness_predicate(m, n));
            for (const auto& kl : s.eigenvalue_descriptors) {
                const bool zero = std::find(s.zero_witnesses.begin(), s.zero_witnesses.end(), kl)
                                  != s.zero_witnesses.end();
                const double lambda = chess_eigenvalue(m, n, kl);
                if (zero) CHECK(std::abs(lambda) < 1e-12);
                else CHECK(std::abs(lambda) > 1e-6);
            }
        }
    }
}

TEST_CASE("triangle multiplier matches the complex modulus")
{
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= 12; ++n)
            for (int k = 1; k <= m; ++k)
                for (int l = 1; l <= n; ++l)
                    CHECK(triangle_multiplier(m, n, {k, l})
                          == doctest::Approx(oracle::triangle_multiplier(m, n, k, l)).epsilon(1e-12));
}

TEST_CASE("triangle multiplier zeros")
{
    const auto s33 = triangle_spectrum(3, 3);
    CHECK(s33.has_zero);
    CHECK(s33.zero_witnesses == std::vector<IndexPair>{{1, 3}, {3, 1}});
    CHECK(std::abs(*s33.min_abs_multiplier) < 1e-12);
    CHECK(oracle::triangle_multiplier(3, 3, 3, 1) < 1e-12);

    const auto s77 = triangle_spectrum(7, 7);
    CHECK(s77.zero_witnesses == std::vector<IndexPair>{{2, 6}, {6, 2}});
    CHECK(triangle_multiplier_min(7, 7) < 1e-12);

    CHECK(triangle_multiplier_min(4, 6) > 1e-9);
    CHECK_FALSE(triangle_spectrum(4, 6).has_zero);

    for (int m = 1; m <= 30; ++m) {
        for (int n = 1; n <= 30; ++n) {
            const bool both = (m + 1) % 4 == 0 && (n + 1) % 4 == 0;
            const auto s = triangle_spectrum(m, n);
            CHECK(s.has_zero == both);
            if (both) CHECK(*s.min_abs_multiplier < 1e-12);
            else if (m <= 12 && n <= 12) CHECK(*s.min_abs_multiplier > 1e-9);
            if (triangle_uniqueness_predicate(m, n)) CHECK(*s.min_abs_multiplier > 1e-9);
        }
    }
}
