#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hirzlog::cli {

/// Malformed command-line or file input (exit code 2).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SurfaceType { P1, P2, F, BlP2 };

struct SurfaceSpec {
    SurfaceType type = SurfaceType::P2;
    std::int64_t e = 0;

    std::size_t rank() const;
    std::string name() const;
    bool operator==(const SurfaceSpec&) const = default;
};

/// "P1", "P2", "F<e>" or "BlP2".
SurfaceSpec parse_surface(std::string_view text);

/// Grammar per surface: P1/P2 "<int>", F<e> "<a>,<b>", BlP2 sums of "<x>H" and
/// "<y>E" terms (or "0").  Whitespace is ignored and a leading '+' is allowed.
std::vector<std::int64_t> parse_divisor(std::string_view text, const SurfaceSpec& surface);

/// Renders a class in the same grammar parse_divisor accepts.
std::string format_divisor(const std::vector<std::int64_t>& coords, const SurfaceSpec& surface);

/// "2,2,1" or the tuple form "3;2,2,1" whose leading count must match.
std::vector<std::int64_t> parse_degrees(std::string_view text);

struct ArrangementSpec {
    SurfaceSpec surface;
    std::vector<std::vector<std::int64_t>> classes;
    std::vector<std::int64_t> counts;

    /// The plane degrees when the surface is P2.
    std::vector<std::int64_t> degrees() const;
};

/// Arrangement JSON; an object carrying an "arrangement" member (as printed by
/// `chern --output json`) is accepted too.
ArrangementSpec parse_arrangement_json(const nlohmann::ordered_json& j);
ArrangementSpec parse_arrangement_text(const std::string& text);
ArrangementSpec parse_arrangement_file(const std::string& path);

/// Canonical JSON form, accepted back by parse_arrangement_json.
nlohmann::ordered_json arrangement_to_json(const ArrangementSpec& a);

} // namespace hirzlog::cli
