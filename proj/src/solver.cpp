#include "papermines/solver.hpp"

#include "papermines/linalg.hpp"

#include <map>
#include <string>

namespace papermines {

std::string_view to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Unique: return "unique";
    case SolveStatus::Multiple: return "multiple";
    case SolveStatus::None: return "none";
    case SolveStatus::Underdetermined: return "underdetermined";
    }
    return "unknown";
}

std::string_view to_string(SolveMethod m)
{
    switch (m) {
    case SolveMethod::BruteForce: return "brute-force";
    case SolveMethod::LinearExact: return "linear-exact";
    }
    return "unknown";
}

namespace {

class Search {
public:
    Search(const Opening& o, std::size_t cap)
        : geometry_(o.geometry()), inc_(make_incidence(o.geometry(), o.open_cells())), clues_(o.clues()),
          cap_(cap)
    {
        value_.assign(inc_.closed.size(), kUnknown);
        mines_.assign(inc_.open.size(), 0);
        unknown_.resize(inc_.open.size());
        for (std::size_t a = 0; a < inc_.open.size(); ++a)
            unknown_[a] = static_cast<int>(inc_.closed_of_open[a].size());
    }

    SolveReport run()
    {
        SolveReport report;
        report.method = SolveMethod::BruteForce;

        // Clues that are unsatisfiable or already forcing before any choice.
        bool ok = true;
        for (std::size_t a = 0; a < inc_.open.size() && ok; ++a)
            ok = check(a) && enqueue(a);
        if (ok && propagate()) descend(0);

        report.count = found_;
        report.count_is_lower_bound = found_ > cap_;
        report.witnesses = std::move(witnesses_);
        report.stats.nodes = nodes_;
        report.status = found_ == 0 ? SolveStatus::None
                        : found_ == 1 ? SolveStatus::Unique
                                      : SolveStatus::Multiple;
        return report;
    }

private:
    static constexpr std::int8_t kUnknown = -1;

    bool check(std::size_t a) const
    {
        return mines_[a] <= clues_[a] && mines_[a] + unknown_[a] >= clues_[a];
    }

    bool enqueue(std::size_t a)
    {
        queue_.push_back(a);
        return true;
    }

    bool assign(std::size_t c, std::int8_t v)
    {
        value_[c] = v;
        trail_.push_back(c);
        bool ok = true;
        for (auto a : inc_.open_of_closed[c]) {
            --unknown_[a];
            mines_[a] += v;
            if (!check(a)) ok = false;
            queue_.push_back(a);
        }
        return ok;
    }

    bool propagate()
    {
        while (!queue_.empty()) {
            const auto a = queue_.back();
            queue_.pop_back();
            if (unknown_[a] == 0) continue;
            std::int8_t forced;
            if (mines_[a] == clues_[a]) forced = 0;
            else if (mines_[a] + unknown_[a] == clues_[a]) forced = 1;
            else continue;
            for (auto c : inc_.closed_of_open[a]) {
                if (value_[c] != kUnknown) continue;
                if (!assign(c, forced)) {
                    queue_.clear();
                    return false;
                }
            }
        }
        return true;
    }

    void undo_to(std::size_t mark)
    {
        while (trail_.size() > mark) {
            const auto c = trail_.back();
            trail_.pop_back();
            for (auto a : inc_.open_of_closed[c]) {
                ++unknown_[a];
                mines_[a] -= value_[c];
            }
            value_[c] = kUnknown;
        }
    }

    void descend(std::size_t next)
    {
        ++nodes_;
        while (next < value_.size() && value_[next] != kUnknown)
            ++next;
        if (next == value_.size()) {
            record();
            return;
        }
        for (std::int8_t v : {std::int8_t{0}, std::int8_t{1}}) {
            if (found_ > cap_) return;
            const auto mark = trail_.size();
            if (assign(next, v) && propagate()) descend(next + 1);
            queue_.clear();
            undo_to(mark);
        }
    }

    void record()
    {
        ++found_;
        if (witnesses_.size() < cap_) {
            std::vector<std::uint8_t> bits(value_.begin(), value_.end());
            witnesses_.emplace_back(geometry_, inc_.closed, std::move(bits));
        }
    }

    Geometry geometry_;
    Incidence inc_;
    std::vector<int> clues_;
    std::size_t cap_;

    std::vector<std::int8_t> value_;
    std::vector<int> mines_;
    std::vector<int> unknown_;
    std::vector<std::size_t> trail_;
    std::vector<std::size_t> queue_;

    std::vector<MineMask> witnesses_;
    std::uint64_t found_ = 0;
    std::uint64_t nodes_ = 0;
};

void require_guard(std::size_t closed, std::size_t guard)
{
    if (closed > guard)
        throw EnumerationLimitError("enumeration refused: " + std::to_string(closed)
                                    + " closed cells exceed the guard of " + std::to_string(guard));
}

} // namespace

SolveReport brute_force_solutions(const Opening& o, std::size_t cap, std::size_t guard)
{
    if (cap == 0) throw std::invalid_argument("witness cap must be positive");
    const auto closed = o.geometry().cell_count() - o.open_cells().size();
    require_guard(closed, guard);
    return Search(o, cap).run();
}

SolveReport linear_solve_opening(const Opening& o)
{
    const auto e = build_clue_matrix(o.geometry(), o.open_cells());
    SolveReport report;
    report.method = SolveMethod::LinearExact;
    report.stats.rows = e.rows.size();
    report.stats.cols = e.cols.size();

    const auto outcome = exact_solve(e, o.clues());
    if (const auto* x = std::get_if<RationalVector>(&outcome)) {
        report.stats.rank = e.cols.size();
        std::vector<std::uint8_t> bits;
        bits.reserve(x->size());
        for (const auto& v : *x) {
            if (v != 0 && v != 1) {
                report.status = SolveStatus::None;
                return report;
            }
            bits.push_back(v == 1 ? 1 : 0);
        }
        report.status = SolveStatus::Unique;
        report.count = 1;
        report.witnesses.emplace_back(o.geometry(), e.cols, std::move(bits));
    } else if (const auto* u = std::get_if<Underdetermined>(&outcome)) {
        report.status = SolveStatus::Underdetermined;
        report.stats.kernel_dimension = u->kernel_dimension;
        report.stats.rank = e.cols.size() - u->kernel_dimension;
    } else {
        report.status = SolveStatus::None;
        report.stats.rank = exact_rank(e);
        report.stats.kernel_dimension = e.cols.size() - report.stats.rank;
    }
    return report;
}

Verdict verify_table(const Opening& o, const VerifyOptions& options)
{
    auto linear = linear_solve_opening(o);
    const auto closed = o.geometry().cell_count() - o.open_cells().size();

    if (linear.status == SolveStatus::Underdetermined) {
        if (closed > options.guard)
            throw IndeterminateError("cannot decide uniqueness: clue matrix has kernel dimension "
                                     + std::to_string(linear.stats.kernel_dimension) + " and "
                                     + std::to_string(closed) + " closed cells exceed the enumeration guard of "
                                     + std::to_string(options.guard));
        auto brute = brute_force_solutions(o, kDefaultWitnessCap, options.guard);
        brute.stats.rank = linear.stats.rank;
        brute.stats.rows = linear.stats.rows;
        brute.stats.cols = linear.stats.cols;
        brute.stats.kernel_dimension = linear.stats.kernel_dimension;
        const bool unique = brute.status == SolveStatus::Unique;
        return {unique, std::move(brute)};
    }

    if (options.cross_check && closed <= options.guard) {
        const auto brute = brute_force_solutions(o, kDefaultWitnessCap, options.guard);
        const bool agree = brute.status == linear.status
                           && (linear.status != SolveStatus::Unique || brute.witnesses == linear.witnesses);
        if (!agree)
            throw std::logic_error("linear and brute-force verdicts disagree: "
                                   + std::string(to_string(linear.status)) + " vs "
                                   + std::string(to_string(brute.status)));
        linear.stats.nodes = brute.stats.nodes;
    }
    const bool unique = linear.status == SolveStatus::Unique;
    return {unique, std::move(linear)};
}

std::optional<Counterexample> find_counterexample(const Geometry& g, const OpenPattern& p,
                                                  std::uint64_t budget, std::size_t guard)
{
    const auto open = expand_pattern(g, p);
    const auto inc = make_incidence(g, open);
    const auto closed = inc.closed.size();
    require_guard(closed, guard);

    const std::uint64_t total = std::uint64_t{1} << closed;
    std::map<std::vector<int>, std::uint64_t> seen;
    auto mask_of = [&](std::uint64_t bits) {
        std::vector<std::uint8_t> v(closed);
        for (std::size_t c = 0; c < closed; ++c)
            v[c] = static_cast<std::uint8_t>((bits >> c) & 1U);
        return MineMask(g, inc.closed, std::move(v));
    };

    std::vector<int> clues(inc.open.size());
    for (std::uint64_t bits = 0; bits < total && bits < budget; ++bits) {
        for (std::size_t a = 0; a < inc.open.size(); ++a) {
            int f = 0;
            for (auto c : inc.closed_of_open[a])
                f += static_cast<int>((bits >> c) & 1U);
            clues[a] = f;
        }
        const auto [it, inserted] = seen.emplace(clues, bits);
        if (!inserted) return Counterexample{mask_of(it->second), mask_of(bits)};
    }
    return std::nullopt;
}

} // namespace papermines
