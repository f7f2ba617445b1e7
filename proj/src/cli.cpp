#include "papermines/cli.hpp"

#include "papermines/document.hpp"
#include "papermines/generator.hpp"
#include "papermines/linalg.hpp"
#include "papermines/solver.hpp"
#include "papermines/spectrum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

namespace papermines {

namespace {

struct GenerateArgs {
    int rows = 0;
    int cols = 0;
    std::string pattern = "chess";
    std::string geometry = "square";
    std::string mode = "bernoulli";
    std::optional<std::uint64_t> seed;
    std::string p = "1/2";
    std::string output;
    std::string format = "json";
    bool without_solution = false;
    bool allow_unproven = false;
};

struct SolveArgs {
    std::string input;
    std::string method = "auto";
    std::string geometry = "square";
    std::size_t guard = kDefaultEnumerationGuard;
};

struct VerifyArgs {
    std::string input;
    std::string geometry = "square";
    std::size_t guard = kDefaultEnumerationGuard;
    bool cross_check = false;
};

struct SpectrumArgs {
    int rows = 0;
    int cols = 0;
    std::string geometry = "square";
    bool json = false;
};

struct ExportArgs {
    std::string input;
    std::string output;
    std::string geometry = "square";
    bool strip_solution = false;
};

class Refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int status_exit(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Unique: return kExitOk;
    case SolveStatus::Multiple: return kExitMultiple;
    case SolveStatus::None: return kExitNone;
    case SolveStatus::Underdetermined: return kExitRefused;
    }
    return kExitError;
}

std::string describe_count(const SolveReport& r)
{
    return (r.count_is_lower_bound ? "at least " : "") + std::to_string(r.count);
}

void emit(const std::string& path, const std::string& contents, std::ostream& out)
{
    if (path.empty() || path == "-") out << contents;
    else write_file(path, contents);
}

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err)
{
    GenConfig cfg;
    cfg.geometry = Geometry(parse_neighborhood(a.geometry), a.rows, a.cols);
    cfg.pattern = OpenPattern{parse_pattern_kind(a.pattern), {}};
    if (cfg.pattern.kind == PatternKind::Explicit)
        throw std::invalid_argument("generate supports the chess and top-row patterns");
    cfg.mode = parse_gen_mode(a.mode);
    cfg.p = Probability::parse(a.p);
    cfg.allow_unproven = a.allow_unproven;
    if (a.seed) {
        cfg.seed = *a.seed;
    } else {
        std::random_device entropy;
        cfg.seed = (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
        err << "seed: " << cfg.seed << "\n";
    }

    const auto result = [&] {
        try {
            return generate(cfg);
        } catch (const GenerationRefused& e) {
            throw Refusal(e.what());
        }
    }();

    if (result.log.conflicts > 0)
        err << "note: " << result.log.conflicts << " last-row rule conflicts resolved in favour of the clue above\n";

    Provenance prov{std::string(to_string(cfg.mode)), cfg.seed, cfg.p.to_string(), std::string(kToolkitVersion)};
    std::optional<MineMask> solution;
    if (!a.without_solution) solution = result.mask;
    auto doc = make_document(result.opening, std::move(solution), std::move(prov));

    if (a.format == "text") emit(a.output, render_text(doc), out);
    else emit(a.output, to_json(doc), out);
    return kExitOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err)
{
    const auto doc = load_document(a.input, parse_neighborhood(a.geometry));
    SolveReport report;
    try {
        if (a.method == "brute") {
            report = brute_force_solutions(doc.opening, kDefaultWitnessCap, a.guard);
        } else if (a.method == "linear") {
            report = linear_solve_opening(doc.opening);
        } else if (a.method == "auto") {
            report = verify_table(doc.opening, {a.guard, false}).report;
        } else {
            throw std::invalid_argument("unknown method '" + a.method + "'");
        }
    } catch (const EnumerationLimitError& e) {
        throw Refusal(e.what());
    } catch (const IndeterminateError& e) {
        throw Refusal(e.what());
    }

    switch (report.status) {
    case SolveStatus::Unique:
        out << render_text(doc.opening, report.solution());
        break;
    case SolveStatus::Multiple:
        err << "multiple solutions (" << describe_count(report) << ")\n";
        for (std::size_t k = 0; k < report.witnesses.size(); ++k) {
            if (k > 0) out << "\n";
            out << render_text(doc.opening, &report.witnesses[k]);
        }
        break;
    case SolveStatus::None:
        err << "no solution\n";
        break;
    case SolveStatus::Underdetermined:
        err << "refused: the clue system has kernel dimension " << report.stats.kernel_dimension
            << "; the linear method cannot decide, rerun with --method brute\n";
        break;
    }
    return status_exit(report.status);
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream&)
{
    const auto doc = load_document(a.input, parse_neighborhood(a.geometry));
    Verdict verdict;
    try {
        verdict = verify_table(doc.opening, {a.guard, a.cross_check});
    } catch (const IndeterminateError& e) {
        throw Refusal(e.what());
    }
    const auto& r = verdict.report;

    out << "geometry: " << to_string(doc.geometry().kind()) << " " << doc.geometry().rows() << "x"
        << doc.geometry().cols() << "\n";
    switch (r.status) {
    case SolveStatus::Unique: out << "verdict: table (unique solution)\n"; break;
    case SolveStatus::Multiple: out << "verdict: not a table (" << describe_count(r) << " solutions)\n"; break;
    case SolveStatus::None: out << "verdict: not a table (no solution)\n"; break;
    case SolveStatus::Underdetermined: out << "verdict: undecided\n"; break;
    }
    out << "method: " << to_string(r.method) << "\n";
    out << "clue matrix: " << r.stats.rows << "x" << r.stats.cols << ", rank " << r.stats.rank << ", kernel dimension "
        << r.stats.kernel_dimension << "\n";
    if (r.method == SolveMethod::BruteForce || a.cross_check) out << "search nodes: " << r.stats.nodes << "\n";
    if (doc.solution && r.solution())
        out << "document solution: " << (*doc.solution == *r.solution() ? "matches" : "differs") << "\n";
    return status_exit(r.status);
}

std::string format_pairs(const std::vector<IndexPair>& pairs)
{
    std::string s;
    for (const auto& kl : pairs) {
        if (!s.empty()) s += ' ';
        s += "(" + std::to_string(kl.k) + "," + std::to_string(kl.l) + ")";
    }
    return s;
}

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out, std::ostream&)
{
    const auto kind = parse_neighborhood(a.geometry);
    const int m = a.rows;
    const int n = a.cols;
    const bool triangle = kind == Neighborhood::Triangle12;
    const auto report = triangle ? triangle_spectrum(m, n) : chess_spectrum(m, n);
    const bool hypothesis = triangle ? triangle_uniqueness_predicate(m, n) : chess_uniqueness_predicate(m, n);
    // On triangle grids the multiplier test does not decide uniqueness; the exact rank does.
    std::size_t rank = 0;
    std::size_t unknowns = 0;
    if (triangle) {
        const Geometry g(kind, m, n);
        const auto e = build_clue_matrix(g, expand_pattern(g, OpenPattern::chess()));
        rank = exact_rank(e);
        unknowns = e.cols.size();
    }

    if (a.json) {
        nlohmann::ordered_json j;
        j["geometry"] = {{"kind", to_string(kind)}, {"rows", m}, {"cols", n}};
        auto values = nlohmann::ordered_json::array();
        for (const auto& kl : report.eigenvalue_descriptors) {
            const double v = triangle ? triangle_multiplier(m, n, kl) : chess_eigenvalue(m, n, kl);
            values.push_back({{"k", kl.k}, {"l", kl.l}, {triangle ? "multiplier" : "eigenvalue", v}});
        }
        j[triangle ? "multipliers" : "eigenvalues"] = values;
        j["has_zero"] = report.has_zero;
        auto witnesses = nlohmann::ordered_json::array();
        for (const auto& kl : report.zero_witnesses)
            witnesses.push_back({kl.k, kl.l});
        j["zero_witnesses"] = witnesses;
        if (report.min_abs_multiplier) j["min_abs_multiplier"] = *report.min_abs_multiplier;
        j["uniqueness_hypothesis"] = hypothesis;
        if (triangle) {
            j["clue_matrix_rank"] = rank;
            j["closed_cells"] = unknowns;
            j["unique_for_all_masks"] = rank == unknowns;
        }
        out << j.dump(2) << "\n";
        return kExitOk;
    }

    out << "geometry: " << to_string(kind) << " " << m << "x" << n << "\n";
    if (triangle) {
        out << "multiplier: 4|cos x + cos y + e^(ix) cos 2y|^2 at x = pi k/" << m + 1 << ", y = pi l/" << n + 1 << "\n";
        std::ostringstream v;
        v << std::scientific << std::setprecision(6) << *report.min_abs_multiplier;
        out << "minimum multiplier: " << v.str() << "\n";
        if (report.has_zero) out << "zero multiplier at: " << format_pairs(report.zero_witnesses) << "\n";
        else out << "no zero multiplier\n";
        out << "hypothesis 4 does not divide m+1 and n+1: " << (hypothesis ? "holds" : "fails") << "\n";
        out << "clue matrix rank: " << rank << " of " << unknowns << " closed cells; "
            << (rank == unknowns ? "unique for all M" : "some M are ambiguous") << "\n";
    } else {
        out << "eigenvalues: 2(cos(pi k/" << m + 1 << ") + cos(pi l/" << n + 1 << ")), 1 <= k <= " << m
            << ", 1 <= l <= " << n << "\n";
        if (report.has_zero) {
            out << "zero eigenvalue at: " << format_pairs(report.zero_witnesses) << "\n";
            out << "uniqueness not guaranteed: gcd(" << m + 1 << "," << n + 1 << ") != 1\n";
        } else {
            out << "no zero eigenvalue; unique for all M\n";
        }
    }
    return kExitOk;
}

int cmd_export_web(const ExportArgs& a, std::ostream& out, std::ostream& err)
{
    auto doc = load_document(a.input, parse_neighborhood(a.geometry));
    Verdict verdict;
    try {
        verdict = verify_table(doc.opening);
    } catch (const IndeterminateError& e) {
        throw Refusal(e.what());
    }
    if (!verdict.is_table) {
        err << "refused: not a table (" << to_string(verdict.report.status) << ")\n";
        return status_exit(verdict.report.status);
    }
    if (a.strip_solution) doc.solution.reset();
    else doc.solution = *verdict.report.solution();
    if (!doc.provenance) doc.provenance = Provenance{"imported", std::nullopt, std::nullopt, std::string(kToolkitVersion)};
    validate(doc);
    emit(a.output, to_json(doc), out);
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generate, solve and verify Paper Minesweeper tables", "papermines"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolkitVersion));

    const std::vector<std::string> geometries{"square", "triangle"};

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Generate a table with a unique solution");
    g->add_option("--rows,-m", gen.rows, "Number of rows")->required();
    g->add_option("--cols,-n", gen.cols, "Number of columns")->required();
    g->add_option("--pattern", gen.pattern, "Open-cell pattern")
        ->check(CLI::IsMember({"chess", "top-row"}))->capture_default_str();
    g->add_option("--geometry", gen.geometry, "Neighbourhood rule")->check(CLI::IsMember(geometries))->capture_default_str();
    g->add_option("--mode", gen.mode, "Generator mode")
        ->check(CLI::IsMember({"bernoulli", "no-trivial", "no-trivial-full"}))->capture_default_str();
    g->add_option("--seed", gen.seed, "64-bit seed; drawn from entropy and printed when absent");
    g->add_option("--p", gen.p, "Mine probability, a/b or decimal")->capture_default_str();
    g->add_option("--output,-o", gen.output, "Output file (stdout when absent)");
    g->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    g->add_flag("--without-solution", gen.without_solution, "Omit the solution from the document");
    g->add_flag("--allow-unproven", gen.allow_unproven, "Generate even without a uniqueness guarantee");

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Solve an opening and print the solved grid");
    s->add_option("input", solve.input, "Puzzle document (JSON or text grid)")->required();
    s->add_option("--method", solve.method, "Solving path")->check(CLI::IsMember({"auto", "brute", "linear"}))->capture_default_str();
    s->add_option("--geometry", solve.geometry, "Neighbourhood rule for text grids")->check(CLI::IsMember(geometries))->capture_default_str();
    s->add_option("--guard", solve.guard, "Maximum closed cells for enumeration")->capture_default_str();

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Decide whether an opening is a table");
    v->add_option("input", verify.input, "Puzzle document (JSON or text grid)")->required();
    v->add_option("--geometry", verify.geometry, "Neighbourhood rule for text grids")->check(CLI::IsMember(geometries))->capture_default_str();
    v->add_option("--guard", verify.guard, "Maximum closed cells for enumeration")->capture_default_str();
    v->add_flag("--cross-check", verify.cross_check, "Run brute force alongside the linear path");

    SpectrumArgs spec;
    auto* sp = app.add_subcommand("spectrum", "Report the spectral uniqueness test for a chess-pattern grid");
    sp->add_option("--rows,-m", spec.rows, "Number of rows")->required()->check(CLI::PositiveNumber);
    sp->add_option("--cols,-n", spec.cols, "Number of columns")->required()->check(CLI::PositiveNumber);
    sp->add_option("--geometry", spec.geometry, "Neighbourhood rule")->check(CLI::IsMember(geometries))->capture_default_str();
    sp->add_flag("--json", spec.json, "Emit JSON");

    ExportArgs exp;
    auto* e = app.add_subcommand("export-web", "Write a validated, solved document for the web player");
    e->add_option("input", exp.input, "Puzzle document (JSON or text grid)")->required();
    e->add_option("--output,-o", exp.output, "Output file (stdout when absent)");
    e->add_option("--geometry", exp.geometry, "Neighbourhood rule for text grids")->check(CLI::IsMember(geometries))->capture_default_str();
    e->add_flag("--strip-solution", exp.strip_solution, "Leave the solution out of the export");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& pe) {
        const int code = app.exit(pe, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*g) return cmd_generate(gen, out, err);
        if (*s) return cmd_solve(solve, out, err);
        if (*v) return cmd_verify(verify, out, err);
        if (*sp) return cmd_spectrum(spec, out, err);
        if (*e) return cmd_export_web(exp, out, err);
    } catch (const Refusal& r) {
        err << "refused: " << r.what() << "\n";
        return kExitRefused;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

} // namespace papermines
