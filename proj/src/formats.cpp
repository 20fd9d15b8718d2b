#include "oddplanar/formats.hpp"

#include <charconv>
#include <stdexcept>

namespace oddplanar {

std::vector<CombinatorialMap> parse_planar_code(std::string_view bytes) {
  if (bytes.size() < kPlanarCodeHeader.size() || bytes.substr(0, kPlanarCodeHeader.size()) != kPlanarCodeHeader)
    throw FormatError("missing >>planar_code<< header", 0);
  std::vector<CombinatorialMap> maps;
  std::size_t pos = kPlanarCodeHeader.size();
  while (pos < bytes.size()) {
    // Concatenated files repeat the header; it cannot start a valid record.
    if (bytes.substr(pos, kPlanarCodeHeader.size()) == kPlanarCodeHeader) {
      pos += kPlanarCodeHeader.size();
      continue;
    }
    const std::size_t record = pos;
    const int n = static_cast<unsigned char>(bytes[pos++]);
    if (n == 0) throw FormatError("record with zero vertices", record);
    std::vector<std::vector<VertexId>> rotations(n);
    for (int v = 0; v < n; ++v) {
      while (true) {
        if (pos >= bytes.size()) throw FormatError("truncated record", pos);
        const int u = static_cast<unsigned char>(bytes[pos]);
        if (u == 0) {
          ++pos;
          break;
        }
        if (u > n) throw FormatError("neighbour " + std::to_string(u) + " exceeds vertex count", pos);
        rotations[v].push_back(u - 1);
        ++pos;
      }
    }
    try {
      maps.emplace_back(std::move(rotations));
    } catch (const InvalidMap& e) {
      throw FormatError(e.what(), record);
    }
  }
  return maps;
}

std::string emit_planar_code(std::span<const CombinatorialMap> maps) {
  std::string out(kPlanarCodeHeader);
  for (const auto& map : maps) {
    if (map.vertex_count() > 255)
      throw std::invalid_argument("planar_code supports at most 255 vertices, map has " +
                                  std::to_string(map.vertex_count()));
    out.push_back(static_cast<char>(map.vertex_count()));
    for (VertexId v = 0; v < map.vertex_count(); ++v) {
      for (VertexId u : map.rotation(v)) out.push_back(static_cast<char>(u + 1));
      out.push_back('\0');
    }
  }
  return out;
}

namespace {

std::vector<int> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
      throw FormatError("expected integer", line_no);
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

std::vector<CombinatorialMap> parse_rotmap(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> lines;
  std::size_t start = 0, line_no = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    if (line.empty() || line.front() != '#') lines.emplace_back(line, line_no);
    start = end + 1;
    ++line_no;
  }

  std::vector<CombinatorialMap> maps;
  std::size_t i = 0;
  while (i < lines.size()) {
    if (is_blank(lines[i].first)) {
      ++i;
      continue;
    }
    const std::size_t header_line = lines[i].second;
    const auto header = parse_ints(lines[i].first, header_line);
    if (header.size() != 1 || header[0] <= 0) throw FormatError("expected vertex count", header_line);
    const int n = header[0];
    ++i;
    std::vector<std::vector<VertexId>> rotations(n);
    for (int v = 0; v < n; ++v, ++i) {
      if (i >= lines.size() || is_blank(lines[i].first))
        throw FormatError("truncated graph: expected " + std::to_string(n) + " rotation lines", header_line);
      for (int u : parse_ints(lines[i].first, lines[i].second)) {
        if (u < 1 || u > n) throw FormatError("neighbour out of range", lines[i].second);
        rotations[v].push_back(u - 1);
      }
    }
    try {
      maps.emplace_back(std::move(rotations));
    } catch (const InvalidMap& e) {
      throw FormatError(e.what(), header_line);
    }
  }
  return maps;
}

std::string emit_rotmap(std::span<const CombinatorialMap> maps) {
  std::string out;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (k > 0) out += '\n';
    const auto& map = maps[k];
    out += std::to_string(map.vertex_count()) + '\n';
    for (VertexId v = 0; v < map.vertex_count(); ++v) {
      bool first = true;
      for (VertexId u : map.rotation(v)) {
        if (!first) out += ' ';
        out += std::to_string(u + 1);
        first = false;
      }
      out += '\n';
    }
  }
  return out;
}

MapFormat detect_format(std::string_view bytes) {
  return bytes.substr(0, kPlanarCodeHeader.size()) == kPlanarCodeHeader ? MapFormat::PlanarCode
                                                                         : MapFormat::Rotmap;
}

std::vector<CombinatorialMap> parse_maps(std::string_view bytes) {
  return detect_format(bytes) == MapFormat::PlanarCode ? parse_planar_code(bytes) : parse_rotmap(bytes);
}

std::string emit_maps(std::span<const CombinatorialMap> maps, MapFormat format) {
  return format == MapFormat::PlanarCode ? emit_planar_code(maps) : emit_rotmap(maps);
}

}  // namespace oddplanar
