#pragma once

// Seeded generation of tables: Bernoulli filling, and the row-by-row
// filling that steers clues away from 0 and from the closed-neighbour count.

#include "papermines/geometry.hpp"
#include "papermines/opening.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace papermines {

/// Exact mine probability num/den.
struct Probability {
    std::uint64_t num = 1;
    std::uint64_t den = 2;

    /// Accepts "a/b" or a decimal such as "0.35". Throws std::invalid_argument
    /// for malformed input or values outside [0, 1].
    static Probability parse(std::string_view text);

    std::string to_string() const;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Probability& a, const Probability& b)
    {
        return a.num * b.den == b.num * a.den;
    }
};

/// The generator stream: std::mt19937_64 seeded with the 64-bit seed. Its
/// output sequence is fixed by the C++ standard, and Bernoulli draws use
/// rejection sampling on raw 64-bit words, so fixtures are stable across
/// platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). Precondition: bound > 0.
    std::uint64_t below(std::uint64_t bound);

    bool bernoulli(const Probability& p);

private:
    std::mt19937_64 engine_;
};

/// Seed of the index-th independent stream derived from `seed` (SplitMix64 mixing).
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

enum class GenMode {
    Bernoulli,
    NoTrivialRows,              ///< forcing rule from the clue above, rows 2..m
    NoTrivialRowsWithLastRowFix ///< rows 2..m-1 as above; last row also uses its row neighbour
};

std::string_view to_string(GenMode mode);
GenMode parse_gen_mode(std::string_view name);

struct GenConfig {
    Geometry geometry = Geometry::square(4, 3);
    OpenPattern pattern = OpenPattern::chess();
    Probability p;
    std::uint64_t seed = 0;
    GenMode mode = GenMode::Bernoulli;
    /// Generate even when no uniqueness guarantee is known for the geometry.
    bool allow_unproven = false;
};

struct Guarantee {
    bool holds = false;
    std::string condition; ///< the condition checked, with the offending values when it fails
};

/// The uniqueness guarantee for every mine set on this geometry and pattern:
/// gcd(m+1, n+1) = 1 for square chess, 3 ∤ (n+1) for the 2 x n top row,
/// full column rank of the clue matrix otherwise. Triangle chess needs
/// 4 ∤ (m+1) and 4 ∤ (n+1) and also full column rank: the divisibility
/// condition alone admits ambiguous grids such as 2 x 2.
Guarantee uniqueness_guarantee(const Geometry& g, const OpenPattern& p);

class GenerationRefused : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenerationLog {
    std::size_t forced_mines = 0;
    std::size_t forced_empty = 0;
    /// Last-row cells where the clue above and the row neighbour demanded
    /// opposite values; the clue above won.
    std::size_t conflicts = 0;
};

struct Generated {
    Opening opening;
    MineMask mask;
    GenerationLog log;
};

/// Dispatches on cfg.mode. Throws GenerationRefused when the guarantee
/// fails and cfg.allow_unproven is false.
Generated generate(const GenConfig& cfg);

/// Row 1 by Bernoulli; every later closed cell (i, j) completes the open
/// cell (i-1, j) above it and is forced when that partial clue is 0 (mine)
/// or one below its closed-neighbour count (empty). Bernoulli otherwise.
/// Requires the chess pattern on a square grid (std::invalid_argument).
Generated generate_no_trivial(const GenConfig& cfg);

/// As generate_no_trivial for rows 1..m-1. The last row also completes its
/// open row neighbours: it is swept toward its closed corner cell, so each
/// open cell of the row is finished by the closed cell after it. On grids
/// with mn even and n >= 2 no open cell ends up trivial.
Generated generate_no_trivial_full(const GenConfig& cfg);

/// `count` documents with seeds stream_seed(cfg.seed, k); identical to the
/// sequential result for any thread count.
std::vector<Generated> generate_many(const GenConfig& cfg, std::size_t count, unsigned threads = 1);

} // namespace papermines
