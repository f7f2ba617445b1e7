#pragma once

// Solving openings: a propagating brute-force oracle, the exact linear
// path, the table verdict and counterexample search.

#include "papermines/geometry.hpp"
#include "papermines/opening.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace papermines {

inline constexpr std::size_t kDefaultWitnessCap = 2;
inline constexpr std::size_t kDefaultEnumerationGuard = 30;

enum class SolveStatus {
    Unique,
    Multiple,
    None,
    Underdetermined, ///< linear path only: consistent but rank deficient
};

enum class SolveMethod { BruteForce, LinearExact };

std::string_view to_string(SolveStatus s);
std::string_view to_string(SolveMethod m);

struct SolveStats {
    std::uint64_t nodes = 0; ///< brute force: search nodes visited
    std::size_t rows = 0;    ///< linear: clue matrix shape
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::size_t kernel_dimension = 0;
};

struct SolveReport {
    SolveStatus status = SolveStatus::None;
    SolveMethod method = SolveMethod::BruteForce;
    /// Solutions found. Exact unless `count_is_lower_bound`.
    std::uint64_t count = 0;
    bool count_is_lower_bound = false;
    /// Unique: the solution. Multiple: the first solutions in search order, at most the cap.
    std::vector<MineMask> witnesses;
    SolveStats stats;

    const MineMask* solution() const
    {
        return status == SolveStatus::Unique ? &witnesses.front() : nullptr;
    }
};

class EnumerationLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

class IndeterminateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Depth-first enumeration over the closed cells in row-major order, trying
/// "empty" before "mine", with unit propagation after every assignment: a
/// clue already met forces its remaining closed neighbours empty, a clue
/// that needs all of them forces them to be mines.
///
/// Stops after cap + 1 solutions, in which case the count is a lower bound.
/// Throws EnumerationLimitError when there are more than `guard` closed
/// cells, std::invalid_argument when cap is 0.
SolveReport brute_force_solutions(const Opening& o, std::size_t cap = kDefaultWitnessCap,
                                  std::size_t guard = kDefaultEnumerationGuard);

/// Exact solve of E x = f. A unique rational solution is the answer when it
/// is 0/1 and proves infeasibility otherwise.
SolveReport linear_solve_opening(const Opening& o);

struct VerifyOptions {
    std::size_t guard = kDefaultEnumerationGuard;
    /// Also run brute force on full-rank systems that fit the guard and
    /// throw std::logic_error if the two paths disagree.
    bool cross_check = false;
};

struct Verdict {
    bool is_table = false;
    SolveReport report;
};

/// Whether `o` has exactly one solution. Linear path on full-rank systems,
/// brute force otherwise; throws IndeterminateError when the system is rank
/// deficient and too large to enumerate.
Verdict verify_table(const Opening& o, const VerifyOptions& options = {});

struct Counterexample {
    MineMask first;
    MineMask second;
};

/// Two distinct mine sets with identical clues, searching masks in
/// increasing binary order (bit k = k-th closed cell) and visiting at most
/// `budget` of them. Throws EnumerationLimitError past the guard.
std::optional<Counterexample> find_counterexample(const Geometry& g, const OpenPattern& p,
                                                  std::uint64_t budget = std::uint64_t{1} << 20,
                                                  std::size_t guard = kDefaultEnumerationGuard);

} // namespace papermines
