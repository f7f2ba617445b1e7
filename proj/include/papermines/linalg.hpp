#pragma once

// Exact linear algebra over the rationals for clue systems E x = f.
//
// Every rank, determinant, solve and kernel computation runs fraction-free
// (Bareiss) elimination on GMP integers. There are no tolerances anywhere
// in this header.

#include "papermines/geometry.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace papermines {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<long long> data);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    long long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    long long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const long long> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<long long> data_;
};

/// Square matrix with ones on the main, super- and sub-diagonal.
IntMatrix tridiagonal_ones(std::size_t n);

/// Incidence matrix of the clue system: rows follow the open cells A,
/// columns the closed cells R \ A, both row-major. entries(a, c) = 1 iff
/// the closed cell c is a neighbour of the open cell a.
struct ClueMatrix {
    std::vector<Cell> rows;
    std::vector<Cell> cols;
    IntMatrix entries;

    bool square() const noexcept { return rows.size() == cols.size(); }
};

/// Throws std::domain_error if `open_cells` is not a subset of R.
ClueMatrix build_clue_matrix(const Geometry& g, const std::vector<Cell>& open_cells);

using RationalVector = std::vector<mpq_class>;

struct Inconsistent {
    friend bool operator==(const Inconsistent&, const Inconsistent&) = default;
};

struct Underdetermined {
    std::size_t kernel_dimension = 0;
    friend bool operator==(const Underdetermined&, const Underdetermined&) = default;
};

/// Unique solution, no solution, or a consistent system with a kernel.
/// Inconsistency is reported before rank deficiency.
using SolveOutcome = std::variant<RationalVector, Inconsistent, Underdetermined>;

std::size_t exact_rank(const IntMatrix& a);
inline std::size_t exact_rank(const ClueMatrix& e) { return exact_rank(e.entries); }

/// Throws std::invalid_argument for a non-square matrix.
mpz_class exact_determinant(const IntMatrix& a);

/// Throws std::invalid_argument if rhs.size() != a.rows().
SolveOutcome exact_solve(const IntMatrix& a, std::span<const long long> rhs);
SolveOutcome exact_solve(const ClueMatrix& e, std::span<const int> clues);

/// Basis of the rational null space, one vector per free column of the
/// echelon form. Each vector is scaled to a primitive integer vector whose
/// entry at its own free column is positive. Empty iff full column rank.
std::vector<RationalVector> kernel_basis(const IntMatrix& a);
inline std::vector<RationalVector> kernel_basis(const ClueMatrix& e) { return kernel_basis(e.entries); }

/// a * x for an integer vector x. Throws std::invalid_argument on size mismatch.
std::vector<long long> multiply(const IntMatrix& a, std::span<const long long> x);
RationalVector multiply(const IntMatrix& a, const RationalVector& x);

} // namespace papermines
