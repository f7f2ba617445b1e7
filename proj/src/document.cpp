#include "papermines/document.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace papermines {

using Json = nlohmann::ordered_json;

namespace {

Json cell_list(const std::vector<Cell>& cells)
{
    Json out = Json::array();
    for (const auto& c : cells)
        out.push_back(Json::array({c.i, c.j}));
    return out;
}

int as_int(const Json& v, std::string_view what)
{
    if (!v.is_number_integer()) throw DocumentError(std::string(what) + " must be an integer");
    return v.get<int>();
}

const Json& field(const Json& obj, const char* key)
{
    if (!obj.is_object() || !obj.contains(key)) throw DocumentError(std::string("missing field '") + key + "'");
    return obj.at(key);
}

Cell cell_from(const Json& v, std::string_view what)
{
    if (!v.is_array() || v.size() < 2) throw DocumentError(std::string(what) + " entries must start with [i, j]");
    return {as_int(v[0], what), as_int(v[1], what)};
}

} // namespace

void validate(const PuzzleDocument& doc)
{
    if (doc.format_version != kFormatVersion)
        throw DocumentError("unsupported format_version " + std::to_string(doc.format_version));

    std::vector<Cell> expected;
    try {
        expected = expand_pattern(doc.geometry(), doc.pattern);
    } catch (const std::exception& e) {
        throw DocumentError(std::string("invalid pattern: ") + e.what());
    }
    if (expected != doc.opening.open_cells())
        throw DocumentError("clue cells do not match the " + std::string(to_string(doc.pattern.kind)) + " pattern");

    if (doc.solution) {
        const auto& s = *doc.solution;
        if (s.geometry() != doc.geometry() || s.closed_cells() != doc.opening.closed_cells())
            throw DocumentError("solution cells and clue cells do not partition the grid");
        if (!satisfies(doc.opening, s)) throw DocumentError("solution does not satisfy the clues");
    }
}

PuzzleDocument make_document(Opening opening, std::optional<MineMask> solution, std::optional<Provenance> provenance)
{
    auto pattern = classify_pattern(opening.geometry(), opening.open_cells());
    PuzzleDocument doc{kFormatVersion, std::move(opening), std::move(pattern), std::move(solution),
                       std::move(provenance)};
    validate(doc);
    return doc;
}

std::string to_json(const PuzzleDocument& doc)
{
    Json j;
    j["format_version"] = doc.format_version;
    j["geometry"] = {{"kind", to_string(doc.geometry().kind())},
                     {"rows", doc.geometry().rows()},
                     {"cols", doc.geometry().cols()}};
    Json pattern = {{"kind", to_string(doc.pattern.kind)}};
    if (doc.pattern.kind == PatternKind::Explicit) pattern["cells"] = cell_list(doc.pattern.cells);
    j["pattern"] = pattern;

    Json clues = Json::array();
    for (std::size_t k = 0; k < doc.opening.open_cells().size(); ++k) {
        const auto& c = doc.opening.open_cells()[k];
        clues.push_back(Json::array({c.i, c.j, doc.opening.clues()[k]}));
    }
    j["clues"] = clues;

    if (doc.solution) {
        Json sol = Json::array();
        const auto& s = *doc.solution;
        for (std::size_t k = 0; k < s.closed_cells().size(); ++k) {
            const auto& c = s.closed_cells()[k];
            sol.push_back(Json::array({c.i, c.j, static_cast<int>(s.bits()[k])}));
        }
        j["solution"] = sol;
    }

    if (doc.provenance) {
        const auto& p = *doc.provenance;
        Json prov;
        prov["mode"] = p.mode;
        // Seeds are strings so JavaScript readers keep all 64 bits.
        prov["seed"] = p.seed ? Json(std::to_string(*p.seed)) : Json(nullptr);
        prov["p"] = p.p ? Json(*p.p) : Json(nullptr);
        prov["toolkit_version"] = p.toolkit_version;
        j["provenance"] = prov;
    }
    return j.dump(2) + "\n";
}

PuzzleDocument from_json(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DocumentError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw DocumentError("document must be a JSON object");

    const int version = as_int(field(j, "format_version"), "format_version");
    if (version != kFormatVersion) throw DocumentError("unsupported format_version " + std::to_string(version));

    try {
        const auto& gj = field(j, "geometry");
        const auto& kind = field(gj, "kind");
        if (!kind.is_string()) throw DocumentError("geometry.kind must be a string");
        const Geometry g(parse_neighborhood(kind.get<std::string>()), as_int(field(gj, "rows"), "geometry.rows"),
                         as_int(field(gj, "cols"), "geometry.cols"));

        const auto& pj = field(j, "pattern");
        const auto& pkind = field(pj, "kind");
        if (!pkind.is_string()) throw DocumentError("pattern.kind must be a string");
        OpenPattern pattern{parse_pattern_kind(pkind.get<std::string>()), {}};
        if (pattern.kind == PatternKind::Explicit) {
            for (const auto& c : field(pj, "cells"))
                pattern.cells.push_back(cell_from(c, "pattern.cells"));
            std::sort(pattern.cells.begin(), pattern.cells.end());
        }

        std::vector<Cell> open;
        std::vector<int> values;
        const auto& cj = field(j, "clues");
        if (!cj.is_array()) throw DocumentError("clues must be an array");
        for (const auto& entry : cj) {
            open.push_back(cell_from(entry, "clues"));
            if (entry.size() != 3) throw DocumentError("clues entries must be [i, j, value]");
            values.push_back(as_int(entry[2], "clue value"));
        }
        Opening opening(g, std::move(open), std::move(values));

        std::optional<MineMask> solution;
        if (j.contains("solution") && !j["solution"].is_null()) {
            std::vector<Cell> cells;
            std::vector<std::pair<Cell, int>> marks;
            for (const auto& entry : j["solution"]) {
                if (!entry.is_array() || entry.size() != 3) throw DocumentError("solution entries must be [i, j, 0|1]");
                const int v = as_int(entry[2], "solution value");
                if (v != 0 && v != 1) throw DocumentError("solution values must be 0 or 1");
                marks.emplace_back(cell_from(entry, "solution"), v);
            }
            std::sort(marks.begin(), marks.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<std::uint8_t> bits;
            for (const auto& [c, v] : marks) {
                cells.push_back(c);
                bits.push_back(static_cast<std::uint8_t>(v));
            }
            solution.emplace(g, std::move(cells), std::move(bits));
        }

        std::optional<Provenance> provenance;
        if (j.contains("provenance") && !j["provenance"].is_null()) {
            const auto& pr = j["provenance"];
            Provenance p;
            p.mode = field(pr, "mode").get<std::string>();
            if (pr.contains("seed") && !pr["seed"].is_null()) {
                const auto& s = pr["seed"];
                if (s.is_string()) p.seed = std::stoull(s.get<std::string>());
                else if (s.is_number_unsigned()) p.seed = s.get<std::uint64_t>();
                else throw DocumentError("provenance.seed must be a decimal string");
            }
            if (pr.contains("p") && !pr["p"].is_null()) p.p = pr["p"].get<std::string>();
            if (pr.contains("toolkit_version")) p.toolkit_version = pr["toolkit_version"].get<std::string>();
            provenance = std::move(p);
        }

        PuzzleDocument doc{version, std::move(opening), std::move(pattern), std::move(solution), std::move(provenance)};
        validate(doc);
        return doc;
    } catch (const DocumentError&) {
        throw;
    } catch (const std::exception& e) {
        throw DocumentError(std::string("invalid document: ") + e.what());
    }
}

std::string render_text(const Opening& opening, const MineMask* marks)
{
    const auto& g = opening.geometry();
    std::string out;
    for (int i = 1; i <= g.rows(); ++i) {
        for (int j = 1; j <= g.cols(); ++j) {
            if (j > 1) out += ' ';
            if (const auto f = opening.clue({i, j})) out += std::to_string(*f);
            else if (!marks) out += '.';
            else out += marks->is_mine({i, j}) ? '*' : '-';
        }
        out += '\n';
    }
    return out;
}

std::string render_text(const PuzzleDocument& doc)
{
    return render_text(doc.opening, doc.solution ? &*doc.solution : nullptr);
}

PuzzleDocument parse_text(std::string_view text, Neighborhood kind)
{
    std::vector<std::vector<std::string>> grid;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream tokens(line);
        std::vector<std::string> row;
        for (std::string t; tokens >> t;)
            row.push_back(t);
        if (!row.empty()) grid.push_back(std::move(row));
    }
    if (grid.empty()) throw DocumentError("empty grid");
    const auto cols = grid.front().size();
    for (std::size_t r = 0; r < grid.size(); ++r)
        if (grid[r].size() != cols)
            throw DocumentError("row " + std::to_string(r + 1) + " has " + std::to_string(grid[r].size())
                                + " cells, expected " + std::to_string(cols));

    const Geometry g(kind, static_cast<int>(grid.size()), static_cast<int>(cols));
    std::vector<Cell> open;
    std::vector<int> clues;
    std::vector<Cell> mines;
    std::size_t unsolved = 0;
    std::size_t marked = 0;
    for (int i = 1; i <= g.rows(); ++i) {
        for (int j = 1; j <= g.cols(); ++j) {
            const auto& t = grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (t == ".") {
                ++unsolved;
            } else if (t == "*" || t == "-") {
                ++marked;
                if (t == "*") mines.push_back({i, j});
            } else if (std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; })
                       && t.size() <= 4) {
                open.push_back({i, j});
                clues.push_back(std::stoi(t));
            } else {
                throw DocumentError("unrecognised cell '" + t + "' at " + to_string(Cell{i, j}));
            }
        }
    }
    if (unsolved > 0 && marked > 0) throw DocumentError("grid mixes unsolved '.' cells with '*'/'-' marks");

    Opening opening(g, open, std::move(clues));
    std::optional<MineMask> solution;
    if (marked > 0) solution = MineMask::from_mines(g, open, mines);
    return make_document(std::move(opening), std::move(solution));
}

PuzzleDocument parse_document(std::string_view text, Neighborhood kind)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return from_json(text);
    return parse_text(text, kind);
}

PuzzleDocument load_document(const std::filesystem::path& path, Neighborhood kind)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read '" + path.string() + "'");
    return parse_document(buffer.str(), kind);
}

void write_file(const std::filesystem::path& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("cannot write '" + path.string() + "'");
}

} // namespace papermines
