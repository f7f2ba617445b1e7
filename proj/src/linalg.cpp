#include "papermines/linalg.hpp"

#include "papermines/opening.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace papermines {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<long long> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != rows * cols)
        throw std::invalid_argument("matrix data does not match its shape");
}

IntMatrix tridiagonal_ones(std::size_t n)
{
    IntMatrix t(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        t(k, k) = 1;
        if (k + 1 < n) {
            t(k, k + 1) = 1;
            t(k + 1, k) = 1;
        }
    }
    return t;
}

ClueMatrix build_clue_matrix(const Geometry& g, const std::vector<Cell>& open_cells)
{
    auto inc = make_incidence(g, open_cells);
    IntMatrix entries(inc.open.size(), inc.closed.size());
    for (std::size_t a = 0; a < inc.open.size(); ++a)
        for (auto c : inc.closed_of_open[a])
            entries(a, c) = 1;
    return {std::move(inc.open), std::move(inc.closed), std::move(entries)};
}

namespace {

mpz_class to_mpz(long long v)
{
    // mpz_class has no long long constructor on every platform.
    mpz_class z;
    const bool negative = v < 0;
    unsigned long long mag = negative ? 0ULL - static_cast<unsigned long long>(v)
                                      : static_cast<unsigned long long>(v);
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
    if (negative) z = -z;
    return z;
}

// Row echelon form from fraction-free elimination. After elimination the
// first `pivots.size()` rows are the pivot rows; every entry is an integer
// minor of the input. `end[r]` bounds the non-zero columns of row r, which
// keeps banded clue matrices cheap to reduce.
struct Echelon {
    std::vector<std::vector<mpz_class>> rows;
    std::vector<mpz_class> rhs;
    std::vector<std::size_t> end;
    std::vector<std::size_t> pivots;
    std::size_t cols = 0;
    int sign = 1;
};

Echelon eliminate(const IntMatrix& a, std::span<const long long> rhs)
{
    Echelon e;
    e.cols = a.cols();
    e.rows.resize(a.rows());
    e.end.assign(a.rows(), 0);
    e.rhs.resize(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto& row = e.rows[r];
        row.resize(a.cols());
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a(r, c) != 0) {
                row[c] = to_mpz(a(r, c));
                e.end[r] = c + 1;
            }
        }
        if (!rhs.empty()) e.rhs[r] = to_mpz(rhs[r]);
    }

    mpz_class prev = 1;
    mpz_class tmp;
    std::size_t r = 0;
    for (std::size_t c = 0; c < e.cols && r < e.rows.size(); ++c) {
        std::size_t p = r;
        while (p < e.rows.size() && sgn(e.rows[p][c]) == 0)
            ++p;
        if (p == e.rows.size()) continue;
        if (p != r) {
            std::swap(e.rows[p], e.rows[r]);
            std::swap(e.rhs[p], e.rhs[r]);
            std::swap(e.end[p], e.end[r]);
            e.sign = -e.sign;
        }

        const mpz_class pivot = e.rows[r][c];
        const auto& prow = e.rows[r];
        for (std::size_t i = r + 1; i < e.rows.size(); ++i) {
            auto& row = e.rows[i];
            const mpz_class factor = row[c];
            if (sgn(factor) == 0) {
                for (std::size_t j = c + 1; j < e.end[i]; ++j) {
                    if (sgn(row[j]) == 0) continue;
                    row[j] *= pivot;
                    mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
                }
                e.rhs[i] *= pivot;
                mpz_divexact(e.rhs[i].get_mpz_t(), e.rhs[i].get_mpz_t(), prev.get_mpz_t());
                continue;
            }
            const std::size_t stop = std::max(e.end[i], e.end[r]);
            for (std::size_t j = c + 1; j < stop; ++j) {
                tmp = pivot * row[j];
                tmp -= factor * prow[j];
                mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            row[c] = 0;
            tmp = pivot * e.rhs[i];
            tmp -= factor * e.rhs[r];
            mpz_divexact(e.rhs[i].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            e.end[i] = stop;
        }
        prev = pivot;
        e.pivots.push_back(c);
        ++r;
    }
    return e;
}

// Solves the pivot rows for the pivot variables given values of the free
// ones already stored in x.
void back_substitute(const Echelon& e, RationalVector& x, bool use_rhs)
{
    for (std::size_t t = e.pivots.size(); t-- > 0;) {
        const auto pc = e.pivots[t];
        const auto& row = e.rows[t];
        mpq_class acc = use_rhs ? mpq_class(e.rhs[t]) : mpq_class(0);
        for (std::size_t j = pc + 1; j < e.end[t]; ++j)
            if (sgn(row[j]) != 0 && sgn(x[j]) != 0) acc -= mpq_class(row[j]) * x[j];
        x[pc] = acc / mpq_class(row[pc]);
    }
}

} // namespace

std::size_t exact_rank(const IntMatrix& a)
{
    return eliminate(a, {}).pivots.size();
}

mpz_class exact_determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (a.rows() == 0) return 1;
    const auto e = eliminate(a, {});
    if (e.pivots.size() < a.rows()) return 0;
    return e.sign * e.rows.back().back();
}

SolveOutcome exact_solve(const IntMatrix& a, std::span<const long long> rhs)
{
    if (rhs.size() != a.rows()) throw std::invalid_argument("right-hand side length does not match row count");

    const auto e = eliminate(a, rhs);
    const auto rank = e.pivots.size();
    for (std::size_t r = rank; r < e.rows.size(); ++r)
        if (sgn(e.rhs[r]) != 0) return Inconsistent{};
    if (rank < a.cols()) return Underdetermined{a.cols() - rank};

    RationalVector x(a.cols());
    back_substitute(e, x, true);
    return x;
}

SolveOutcome exact_solve(const ClueMatrix& e, std::span<const int> clues)
{
    std::vector<long long> rhs(clues.begin(), clues.end());
    return exact_solve(e.entries, rhs);
}

std::vector<RationalVector> kernel_basis(const IntMatrix& a)
{
    const auto e = eliminate(a, {});
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector x(a.cols());
        x[free] = 1;
        back_substitute(e, x, false);

        mpz_class denom_lcm = 1;
        for (const auto& v : x)
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), v.get_den_mpz_t());
        mpz_class num_gcd = 0;
        for (auto& v : x) {
            v *= denom_lcm;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
        }
        for (auto& v : x)
            v /= num_gcd;
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<long long> multiply(const IntMatrix& a, std::span<const long long> x)
{
    if (x.size() != a.cols()) throw std::invalid_argument("vector length does not match column count");
    std::vector<long long> y(a.rows(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            y[r] += a(r, c) * x[c];
    return y;
}

RationalVector multiply(const IntMatrix& a, const RationalVector& x)
{
    if (x.size() != a.cols()) throw std::invalid_argument("vector length does not match column count");
    RationalVector y(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a(r, c) != 0) y[r] += mpq_class(to_mpz(a(r, c))) * x[c];
    return y;
}

} // namespace papermines
