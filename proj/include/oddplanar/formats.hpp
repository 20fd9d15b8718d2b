#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oddplanar/planar_map.hpp"

namespace oddplanar {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

/// Decodes a planar_code byte stream: the 15-byte header followed by records
/// `n, (neighbours of v, 0) for v = 1..n`, neighbours 1-indexed in clockwise
/// order. Throws FormatError carrying the byte offset of the problem.
std::vector<CombinatorialMap> parse_planar_code(std::string_view bytes);

/// Inverse of parse_planar_code. Throws std::invalid_argument for maps with
/// more than 255 vertices.
std::string emit_planar_code(std::span<const CombinatorialMap> maps);

/// Text rotation format: a line with n, then n lines of 1-indexed neighbours;
/// `#` lines are comments and blank lines separate graphs. FormatError
/// offsets are 1-based line numbers.
std::vector<CombinatorialMap> parse_rotmap(std::string_view text);
std::string emit_rotmap(std::span<const CombinatorialMap> maps);

enum class MapFormat { PlanarCode, Rotmap };

/// planar_code when the stream starts with the header, rotmap otherwise.
MapFormat detect_format(std::string_view bytes);
std::vector<CombinatorialMap> parse_maps(std::string_view bytes);
std::string emit_maps(std::span<const CombinatorialMap> maps, MapFormat format);

}  // namespace oddplanar
