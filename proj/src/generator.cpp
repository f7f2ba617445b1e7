#include "papermines/generator.hpp"

#include "papermines/linalg.hpp"
#include "papermines/spectrum.hpp"

#include <charconv>
#include <future>
#include <limits>
#include <numeric>
#include <optional>

namespace papermines {

namespace {

std::uint64_t parse_u64(std::string_view text, std::string_view whole)
{
    std::uint64_t v = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last)
        throw std::invalid_argument("malformed probability '" + std::string(whole) + "'");
    return v;
}

} // namespace

Probability Probability::parse(std::string_view text)
{
    Probability p;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        p.num = parse_u64(text.substr(0, slash), text);
        p.den = parse_u64(text.substr(slash + 1), text);
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18)
            throw std::invalid_argument("malformed probability '" + std::string(text) + "'");
        p.den = 1;
        for (std::size_t k = 0; k < frac.size(); ++k)
            p.den *= 10;
        const auto w = whole.empty() ? 0 : parse_u64(whole, text);
        if (w > 1) throw std::invalid_argument("probability '" + std::string(text) + "' outside [0, 1]");
        p.num = w * p.den + parse_u64(frac, text);
    } else {
        p.num = parse_u64(text, text);
        p.den = 1;
    }
    if (p.den == 0 || p.num > p.den)
        throw std::invalid_argument("probability '" + std::string(text) + "' outside [0, 1]");
    const auto g = std::gcd(p.num, p.den);
    if (g > 1) {
        p.num /= g;
        p.den /= g;
    }
    return p;
}

std::string Probability::to_string() const
{
    return std::to_string(num) + "/" + std::to_string(den);
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t u = engine_();
    while (u > limit)
        u = engine_();
    return u % bound;
}

bool Rng::bernoulli(const Probability& p)
{
    return below(p.den) < p.num;
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string_view to_string(GenMode mode)
{
    switch (mode) {
    case GenMode::Bernoulli: return "bernoulli";
    case GenMode::NoTrivialRows: return "no-trivial";
    case GenMode::NoTrivialRowsWithLastRowFix: return "no-trivial-full";
    }
    return "unknown";
}

GenMode parse_gen_mode(std::string_view name)
{
    if (name == "bernoulli") return GenMode::Bernoulli;
    if (name == "no-trivial") return GenMode::NoTrivialRows;
    if (name == "no-trivial-full") return GenMode::NoTrivialRowsWithLastRowFix;
    throw std::invalid_argument("unknown generator mode '" + std::string(name) + "'");
}

Guarantee uniqueness_guarantee(const Geometry& g, const OpenPattern& p)
{
    const int m = g.rows();
    const int n = g.cols();
    if (g.kind() == Neighborhood::SquareMoore && p.kind == PatternKind::Chess) {
        const int d = std::gcd(m + 1, n + 1);
        if (d == 1) return {true, "gcd(m+1,n+1) = 1"};
        return {false, "gcd(m+1,n+1) must be 1, got gcd(" + std::to_string(m + 1) + ","
                           + std::to_string(n + 1) + ")=" + std::to_string(d)};
    }
    if (g.kind() == Neighborhood::SquareMoore && p.kind == PatternKind::TopRow) {
        if (m != 2) return {false, "the top-row guarantee needs exactly 2 rows, got " + std::to_string(m)};
        if (two_by_n_uniqueness_predicate(n)) return {true, "3 does not divide n+1"};
        return {false, "3 must not divide n+1, got 3 | " + std::to_string(n + 1)};
    }
    if (g.kind() == Neighborhood::Triangle12 && p.kind == PatternKind::Chess) {
        if ((m + 1) % 4 == 0)
            return {false, "(m+1) and (n+1) must not be divisible by 4, got 4 | (m+1) = " + std::to_string(m + 1)};
        if ((n + 1) % 4 == 0)
            return {false, "(m+1) and (n+1) must not be divisible by 4, got 4 | (n+1) = " + std::to_string(n + 1)};
    }
    const auto e = build_clue_matrix(g, expand_pattern(g, p));
    const auto rank = exact_rank(e);
    if (rank == e.cols.size()) {
        if (g.kind() == Neighborhood::Triangle12 && p.kind == PatternKind::Chess)
            return {true, "4 divides neither m+1 nor n+1, and the clue matrix has full column rank"};
        return {true, "clue matrix has full column rank"};
    }
    return {false, "clue matrix must have full column rank, got rank " + std::to_string(rank) + " of "
                       + std::to_string(e.cols.size())};
}

namespace {

void require_guarantee(const GenConfig& cfg)
{
    if (cfg.allow_unproven) return;
    const auto guarantee = uniqueness_guarantee(cfg.geometry, cfg.pattern);
    if (!guarantee.holds) throw GenerationRefused("no uniqueness guarantee: " + guarantee.condition);
}

// Mines placed so far and what remains to be decided, per open cell.
class Filling {
public:
    explicit Filling(const GenConfig& cfg)
        : geometry_(cfg.geometry), inc_(make_incidence(cfg.geometry, expand_pattern(cfg.geometry, cfg.pattern))),
          rng_(cfg.seed), p_(cfg.p)
    {
        value_.assign(inc_.closed.size(), -1);
        partial_.assign(inc_.open.size(), 0);
        unplaced_.resize(inc_.open.size());
        for (std::size_t a = 0; a < inc_.open.size(); ++a)
            unplaced_[a] = static_cast<int>(inc_.closed_of_open[a].size());

        open_index_.assign(geometry_.cell_count(), kNone);
        closed_index_.assign(geometry_.cell_count(), kNone);
        for (std::size_t a = 0; a < inc_.open.size(); ++a)
            open_index_[geometry_.index(inc_.open[a])] = a;
        for (std::size_t c = 0; c < inc_.closed.size(); ++c)
            closed_index_[geometry_.index(inc_.closed[c])] = c;
    }

    std::optional<std::size_t> closed_at(const Cell& c) const { return lookup(closed_index_, c); }
    std::optional<std::size_t> open_at(const Cell& c) const { return lookup(open_index_, c); }

    /// Value forced on closed cell c by the open cell at `ref`, if c is the
    /// last undecided closed neighbour of that cell.
    std::optional<std::uint8_t> forced_by(const Cell& ref, std::size_t c) const
    {
        const auto a = open_at(ref);
        if (!a || unplaced_[*a] != 1 || value_[c] != -1) return std::nullopt;
        const int degree = static_cast<int>(inc_.closed_of_open[*a].size());
        if (partial_[*a] == 0) return std::uint8_t{1};
        if (partial_[*a] == degree - 1) return std::uint8_t{0};
        return std::nullopt;
    }

    void place(std::size_t c, std::uint8_t v)
    {
        value_[c] = v;
        for (auto a : inc_.open_of_closed[c]) {
            --unplaced_[a];
            partial_[a] += v;
        }
    }

    void place_random(std::size_t c) { place(c, rng_.bernoulli(p_) ? 1 : 0); }

    void place_forced(std::size_t c, std::uint8_t v)
    {
        ++(v ? log_.forced_mines : log_.forced_empty);
        place(c, v);
    }

    void note_conflict() { ++log_.conflicts; }

    Generated finish() const
    {
        std::vector<std::uint8_t> bits(value_.size());
        for (std::size_t c = 0; c < value_.size(); ++c)
            bits[c] = value_[c] == 1 ? 1 : 0;
        MineMask mask(geometry_, inc_.closed, std::move(bits));
        auto opening = compute_clues(geometry_, inc_.open, mask);
        if (!satisfies(opening, mask)) throw std::logic_error("generated clues do not match the mine set");
        return {std::move(opening), std::move(mask), log_};
    }

    const Geometry& geometry() const { return geometry_; }

private:
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    std::optional<std::size_t> lookup(const std::vector<std::size_t>& table, const Cell& c) const
    {
        if (!geometry_.contains(c)) return std::nullopt;
        const auto k = table[geometry_.index(c)];
        if (k == kNone) return std::nullopt;
        return k;
    }

    Geometry geometry_;
    Incidence inc_;
    Rng rng_;
    Probability p_;
    std::vector<int> value_;
    std::vector<int> partial_;
    std::vector<int> unplaced_;
    std::vector<std::size_t> open_index_;
    std::vector<std::size_t> closed_index_;
    GenerationLog log_;
};

void fill_row_random(Filling& f, int i)
{
    for (int j = 1; j <= f.geometry().cols(); ++j)
        if (const auto c = f.closed_at({i, j})) f.place_random(*c);
}

void fill_row_from_above(Filling& f, int i)
{
    for (int j = 1; j <= f.geometry().cols(); ++j) {
        const auto c = f.closed_at({i, j});
        if (!c) continue;
        if (const auto v = f.forced_by({i - 1, j}, *c)) f.place_forced(*c, *v);
        else f.place_random(*c);
    }
}

void fill_last_row(Filling& f)
{
    const int m = f.geometry().rows();
    const int n = f.geometry().cols();
    // Sweeping toward a closed corner leaves no open cell of the row last.
    const bool left_to_right = f.closed_at({m, n}).has_value();
    const int step = left_to_right ? 1 : -1;
    for (int k = 0; k < n; ++k) {
        const int j = left_to_right ? 1 + k : n - k;
        const auto c = f.closed_at({m, j});
        if (!c) continue;
        const auto above = f.forced_by({m - 1, j}, *c);
        const auto side = f.forced_by({m, j - step}, *c);
        if (above && side && *above != *side) f.note_conflict();
        if (above) f.place_forced(*c, *above);
        else if (side) f.place_forced(*c, *side);
        else f.place_random(*c);
    }
}

void require_square_chess(const GenConfig& cfg)
{
    if (cfg.geometry.kind() != Neighborhood::SquareMoore || cfg.pattern.kind != PatternKind::Chess)
        throw std::invalid_argument("row-wise generation needs the chess pattern on a square grid");
}

} // namespace

Generated generate(const GenConfig& cfg)
{
    switch (cfg.mode) {
    case GenMode::NoTrivialRows: return generate_no_trivial(cfg);
    case GenMode::NoTrivialRowsWithLastRowFix: return generate_no_trivial_full(cfg);
    case GenMode::Bernoulli: break;
    }
    require_guarantee(cfg);
    Filling f(cfg);
    for (int i = 1; i <= cfg.geometry.rows(); ++i)
        fill_row_random(f, i);
    return f.finish();
}

Generated generate_no_trivial(const GenConfig& cfg)
{
    require_square_chess(cfg);
    require_guarantee(cfg);
    Filling f(cfg);
    fill_row_random(f, 1);
    for (int i = 2; i <= cfg.geometry.rows(); ++i)
        fill_row_from_above(f, i);
    return f.finish();
}

Generated generate_no_trivial_full(const GenConfig& cfg)
{
    require_square_chess(cfg);
    require_guarantee(cfg);
    Filling f(cfg);
    const int m = cfg.geometry.rows();
    fill_row_random(f, 1);
    for (int i = 2; i < m; ++i)
        fill_row_from_above(f, i);
    if (m >= 2) fill_last_row(f);
    return f.finish();
}

std::vector<Generated> generate_many(const GenConfig& cfg, std::size_t count, unsigned threads)
{
    auto one = [&cfg](std::size_t k) {
        auto c = cfg;
        c.seed = stream_seed(cfg.seed, k);
        return generate(c);
    };

    std::vector<Generated> out;
    out.reserve(count);
    if (threads <= 1) {
        for (std::size_t k = 0; k < count; ++k)
            out.push_back(one(k));
        return out;
    }

    std::vector<std::future<std::vector<Generated>>> parts;
    for (unsigned t = 0; t < threads; ++t) {
        parts.push_back(std::async(std::launch::async, [&, t] {
            std::vector<Generated> chunk;
            for (std::size_t k = t; k < count; k += threads)
                chunk.push_back(one(k));
            return chunk;
        }));
    }
    std::vector<std::vector<Generated>> chunks;
    for (auto& part : parts)
        chunks.push_back(part.get());
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(std::move(chunks[k % threads][k / threads]));
    return out;
}

} // namespace papermines
