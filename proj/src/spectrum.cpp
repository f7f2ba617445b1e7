#include "papermines/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace papermines {

namespace {

void require_dimensions(int m, int n)
{
    if (m < 1 || n < 1)
        throw std::domain_error("grid dimensions must be positive, got "
                                + std::to_string(m) + "x" + std::to_string(n));
}

std::vector<IndexPair> all_pairs(int m, int n)
{
    std::vector<IndexPair> out;
    out.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= n; ++l)
            out.push_back({k, l});
    return out;
}

// x + y = pi on the grid P.
bool antidiagonal(int m, int n, IndexPair kl)
{
    const long long mm = m + 1;
    const long long nn = n + 1;
    return kl.k * nn + kl.l * mm == mm * nn;
}

} // namespace

bool chess_uniqueness_predicate(int m, int n)
{
    require_dimensions(m, n);
    return std::gcd(m + 1, n + 1) == 1;
}

bool two_by_n_uniqueness_predicate(int n)
{
    require_dimensions(2, n);
    return (n + 1) % 3 != 0;
}

bool triangle_uniqueness_predicate(int m, int n)
{
    require_dimensions(m, n);
    return (m + 1) % 4 != 0 && (n + 1) % 4 != 0;
}

double chess_eigenvalue(int m, int n, IndexPair kl)
{
    const double x = std::numbers::pi * kl.k / (m + 1);
    const double y = std::numbers::pi * kl.l / (n + 1);
    return 2.0 * (std::cos(x) + std::cos(y));
}

double triangle_multiplier(int m, int n, IndexPair kl)
{
    const double x = std::numbers::pi * kl.k / (m + 1);
    const double y = std::numbers::pi * kl.l / (n + 1);
    const double a = std::cos(x) + std::cos(y);
    const double b = std::cos(2.0 * y);
    return 4.0 * (a * a + b * b + 2.0 * a * b * std::cos(x));
}

double triangle_multiplier_min(int m, int n)
{
    require_dimensions(m, n);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& kl : all_pairs(m, n))
        best = std::min(best, triangle_multiplier(m, n, kl));
    return std::max(best, 0.0);
}

SpectrumReport chess_spectrum(int m, int n)
{
    require_dimensions(m, n);
    SpectrumReport report{Geometry::square(m, n), all_pairs(m, n), false, {}, std::nullopt};
    for (const auto& kl : report.eigenvalue_descriptors)
        if (antidiagonal(m, n, kl)) report.zero_witnesses.push_back(kl);
    report.has_zero = !report.zero_witnesses.empty();
    return report;
}

SpectrumReport triangle_spectrum(int m, int n)
{
    require_dimensions(m, n);
    SpectrumReport report{Geometry::triangle(m, n), all_pairs(m, n), false, {}, triangle_multiplier_min(m, n)};
    const int nn = n + 1;
    for (const auto& kl : report.eigenvalue_descriptors) {
        const int four_l = 4 * kl.l;
        const bool cos2y_zero = four_l % nn == 0 && (four_l / nn) % 2 == 1;
        if (cos2y_zero && antidiagonal(m, n, kl)) report.zero_witnesses.push_back(kl);
    }
    report.has_zero = !report.zero_witnesses.empty();
    return report;
}

} // namespace papermines
