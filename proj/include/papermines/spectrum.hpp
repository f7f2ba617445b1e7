#pragma once

// Closed-form uniqueness predicates and the spectra that decide them.
//
// On the chess pattern the clue matrix is a block of the operator L with
// eigenvalues 2(cos(pi k/(m+1)) + cos(pi l/(n+1))), 1 <= k <= m,
// 1 <= l <= n. An eigenvalue vanishes exactly when k/(m+1) + l/(n+1) = 1,
// which is decided here in integers. The triangle tiling uses the multiplier
// 4 |cos x + cos y + e^{ix} cos 2y|^2 of L L*.

#include "papermines/geometry.hpp"

#include <optional>
#include <vector>

namespace papermines {

struct IndexPair {
    int k = 0;
    int l = 0;
    friend constexpr auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

struct SpectrumReport {
    Geometry geometry;
    std::vector<IndexPair> eigenvalue_descriptors; ///< every (k, l), row-major
    bool has_zero = false;
    std::vector<IndexPair> zero_witnesses;
    std::optional<double> min_abs_multiplier; ///< triangle only; floating point, diagnostic
};

/// gcd(m+1, n+1) = 1. All predicates throw std::domain_error for m < 1 or n < 1.
bool chess_uniqueness_predicate(int m, int n);

/// (n+1) mod 3 != 0, for the 2 x n grid with the top row open.
bool two_by_n_uniqueness_predicate(int n);

/// Neither m+1 nor n+1 divisible by 4.
bool triangle_uniqueness_predicate(int m, int n);

/// 2(cos(pi k/(m+1)) + cos(pi l/(n+1))); documentation only.
double chess_eigenvalue(int m, int n, IndexPair kl);

/// 4 |cos x + cos y + e^{ix} cos 2y|^2 at x = pi k/(m+1), y = pi l/(n+1).
double triangle_multiplier(int m, int n, IndexPair kl);

double triangle_multiplier_min(int m, int n);

SpectrumReport chess_spectrum(int m, int n);

/// Zero witnesses are exact: cos 2y = 0 and x + y = pi, i.e. 4l/(n+1) is an
/// odd integer and k(n+1) + l(m+1) = (m+1)(n+1).
SpectrumReport triangle_spectrum(int m, int n);

} // namespace papermines
