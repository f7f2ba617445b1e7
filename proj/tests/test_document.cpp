#include "paper_tables.hpp"

#include "papermines/document.hpp"
#include "papermines/generator.hpp"

#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>

using namespace papermines;

namespace {

PuzzleDocument generated(const Geometry& g, std::uint64_t seed, GenMode mode = GenMode::Bernoulli)
{
    GenConfig cfg;
    cfg.geometry = g;
    cfg.seed = seed;
    cfg.mode = mode;
    auto out = generate(cfg);
    return make_document(out.opening, out.mask, Provenance{std::string(to_string(mode)), seed, cfg.p.to_string()});
}

std::string replace(std::string text, const std::string& from, const std::string& to)
{
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    return text.replace(at, from.size(), to);
}

} // namespace

TEST_CASE("json layout")
{
    const auto doc = parse_text(tables::examples()[0].solved);
    const auto j = nlohmann::json::parse(to_json(doc));
    CHECK(j["format_version"] == 1);
    CHECK(j["geometry"]["kind"] == "square");
    CHECK(j["geometry"]["rows"] == 4);
    CHECK(j["geometry"]["cols"] == 3);
    CHECK(j["pattern"]["kind"] == "chess");
    CHECK_FALSE(j["pattern"].contains("cells"));
    CHECK(j["clues"][0] == nlohmann::json::array({1, 1, 1}));
    CHECK(j["clues"].size() == 6);
    CHECK(j["solution"][0] == nlohmann::json::array({1, 2, 1}));
    CHECK_FALSE(j.contains("provenance"));

    const auto with = generated(Geometry::square(4, 3), 18446744073709551615ULL);
    const auto k = nlohmann::json::parse(to_json(with));
    CHECK(k["provenance"]["seed"] == "18446744073709551615");
    CHECK(k["provenance"]["p"] == "1/2");
    CHECK(k["provenance"]["mode"] == "bernoulli");
    CHECK(k["provenance"]["toolkit_version"] == std::string(kToolkitVersion));

    const auto odd = parse_text(tables::examples()[1].opening);
    const auto e = nlohmann::json::parse(to_json(odd));
    CHECK(e["pattern"]["kind"] == "explicit");
    CHECK(e["pattern"]["cells"].size() == 15);
    CHECK_FALSE(e.contains("solution"));
}

TEST_CASE("json round trip is byte-stable")
{
    for (auto kind : {Neighborhood::SquareMoore, Neighborhood::Triangle12}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto doc = generated(Geometry(kind, 4, seed % 2 ? 6 : (kind == Neighborhood::SquareMoore ? 5 : 4)), seed);
            const auto text = to_json(doc);
            const auto back = from_json(text);
            CHECK(back == doc);
            CHECK(to_json(back) == text);
            CHECK(parse_text(render_text(doc), kind).opening == doc.opening);
        }
    }
    for (const auto& ex : tables::examples()) {
        const auto doc = parse_text(ex.solved);
        CHECK(render_text(doc) == ex.solved);
        CHECK(from_json(to_json(doc)) == doc);
        CHECK(render_text(parse_text(ex.opening)) == ex.opening);
    }
}

TEST_CASE("json readers accept both seed encodings and a null solution")
{
    const auto doc = generated(Geometry::square(4, 3), 7);
    auto j = nlohmann::ordered_json::parse(to_json(doc));
    j["provenance"]["seed"] = 7;
    CHECK(from_json(j.dump()).provenance->seed == 7);
    j["solution"] = nullptr;
    CHECK_FALSE(from_json(j.dump()).solution.has_value());
}

TEST_CASE("document validation")
{
    const auto text = to_json(parse_text(tables::examples()[0].solved));

    auto rejects = [](const std::string& json, const std::string& needle) {
        try {
            from_json(json);
        } catch (const DocumentError& e) {
            CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
            return;
        }
        FAIL("accepted: " << json);
    };
    rejects(replace(text, "\"format_version\": 1", "\"format_version\": 2"), "format_version 2");
    rejects(replace(text, "\"kind\": \"chess\"", "\"kind\": \"top-row\""), "pattern");
    rejects(replace(text, "\"kind\": \"square\"", "\"kind\": \"hexagon\""), "hexagon");
    rejects(replace(text, "\"rows\": 4", "\"rows\": 0"), "invalid document");
    rejects(replace(text, "\"clues\"", "\"clue\""), "missing field 'clues'");
    rejects("{\"format_version\": 1", "malformed JSON");
    rejects("[1, 2]", "JSON object");

    // Move the mine at (1,2) onto (2,1).
    auto moved = nlohmann::ordered_json::parse(text);
    moved["solution"][0][2] = 0;
    moved["solution"][1][2] = 1;
    rejects(moved.dump(), "does not satisfy");

    auto partial = nlohmann::ordered_json::parse(text);
    partial["solution"].erase(0);
    rejects(partial.dump(), "partition");

    auto bad_value = nlohmann::ordered_json::parse(text);
    bad_value["solution"][0][2] = 2;
    rejects(bad_value.dump(), "0 or 1");

    const auto bad = parse_text("1 .\n. 1\n");
    CHECK_THROWS_AS(make_document(bad.opening, MineMask::from_mines(bad.geometry(), bad.opening.open_cells(), {})),
                    DocumentError);
}

TEST_CASE("text grids")
{
    const auto doc = parse_text("  2 .\n. 2\n\n");
    CHECK(doc.geometry() == Geometry::square(2, 2));
    CHECK(doc.pattern.kind == PatternKind::Chess);
    CHECK(doc.opening.clues() == std::vector<int>{2, 2});

    CHECK(parse_text("1 -\n* 1\n").solution->mines() == std::vector<Cell>{{2, 1}});
    CHECK(parse_text("1 .\n. 1\n", Neighborhood::Triangle12).geometry().kind() == Neighborhood::Triangle12);

    CHECK_THROWS_AS(parse_text(""), DocumentError);
    CHECK_THROWS_AS(parse_text("1 .\n. 1 .\n"), DocumentError);
    CHECK_THROWS_AS(parse_text("1 *\n. 1\n"), DocumentError);
    CHECK_THROWS_AS(parse_text("1 x\n. 1\n"), DocumentError);
    CHECK_THROWS_AS(parse_text("2 *\n- 1\n"), DocumentError); // mines contradict the clues
}

TEST_CASE("files")
{
    const auto dir = std::filesystem::temp_directory_path() / "papermines_test_document";
    std::filesystem::create_directories(dir);
    const auto doc = generated(Geometry::square(4, 3), 1);
    write_file(dir / "doc.json", to_json(doc));
    CHECK(load_document(dir / "doc.json") == doc);
    write_file(dir / "doc.txt", render_text(doc));
    CHECK(load_document(dir / "doc.txt").solution == doc.solution);
    CHECK_THROWS_AS(load_document(dir / "missing.json"), IoError);
    CHECK_THROWS_AS(write_file(dir / "no" / "such" / "dir.json", "x"), IoError);
    std::filesystem::remove_all(dir);
}
