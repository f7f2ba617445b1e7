#pragma once

// PuzzleDocument: the JSON interchange format shared with the web player,
// and the plain-text grid format used for humans and fixtures.
//
// Text grid: one grid row per line, cells separated by single spaces. Open
// cells show their clue; closed cells show '.' (unsolved), '*' (mine) or
// '-' (empty).

#include "papermines/geometry.hpp"
#include "papermines/opening.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace papermines {

inline constexpr int kFormatVersion = 1;
inline constexpr std::string_view kToolkitVersion = "0.1.0";

class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Provenance {
    std::string mode; ///< generator mode, or "imported"
    std::optional<std::uint64_t> seed;
    std::optional<std::string> p;
    std::string toolkit_version{kToolkitVersion};

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct PuzzleDocument {
    int format_version = kFormatVersion;
    Opening opening;
    OpenPattern pattern;
    std::optional<MineMask> solution;
    std::optional<Provenance> provenance;

    const Geometry& geometry() const { return opening.geometry(); }

    friend bool operator==(const PuzzleDocument&, const PuzzleDocument&) = default;
};

/// Pattern chosen by classify_pattern. Throws DocumentError if the solution
/// is not over R \ A or violates a clue.
PuzzleDocument make_document(Opening opening, std::optional<MineMask> solution = std::nullopt,
                             std::optional<Provenance> provenance = std::nullopt);

/// Checks every document invariant; throws DocumentError naming the first violation.
void validate(const PuzzleDocument& doc);

/// Pretty-printed JSON with a trailing newline. Stable byte-for-byte.
std::string to_json(const PuzzleDocument& doc);

/// Throws DocumentError on malformed JSON, an unsupported format_version or
/// any invariant violation.
PuzzleDocument from_json(std::string_view text);

/// One line per row, newline-terminated. `marks`, when given, fills closed
/// cells with '*' and '-'.
std::string render_text(const Opening& opening, const MineMask* marks = nullptr);
std::string render_text(const PuzzleDocument& doc);

/// Parses a text grid. '.' everywhere closed means no solution; '*'/'-'
/// everywhere closed gives the solution. Mixed marks are rejected.
PuzzleDocument parse_text(std::string_view text, Neighborhood kind = Neighborhood::SquareMoore);

/// JSON when the first non-blank character is '{', text grid otherwise.
/// `kind` only applies to text grids. Throws IoError on I/O
/// failure and DocumentError on content errors.
PuzzleDocument load_document(const std::filesystem::path& path, Neighborhood kind = Neighborhood::SquareMoore);
PuzzleDocument parse_document(std::string_view text, Neighborhood kind = Neighborhood::SquareMoore);

/// Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace papermines
