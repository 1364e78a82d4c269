#ifndef DICHRO_IO_HPP
#define DICHRO_IO_HPP

// Text formats.
//
// Edge list:  "n d\n" then one "u v\n" line per edge, codes in decimal.
// Coloring:   "n d\n" then one line of n^d space-separated colors; the i-th
//             value is the color of vertex code i.
//
// Parsers throw FormatError with a one-line reason.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dichro/coloring.hpp"
#include "dichro/construction.hpp"
#include "dichro/digraph.hpp"

namespace dichro {

void write_edge_list(std::ostream& out, const Params& p, std::span<const Edge> edges);
std::string format_edge_list(const Params& p, std::span<const Edge> edges);

struct EdgeListFile {
  Params params;
  std::vector<Edge> edges;  // sorted, without duplicates
};
// Edges must be in range and loop-free; duplicates are dropped.
EdgeListFile parse_edge_list(std::string_view text);
EdgeListFile read_edge_list(const std::filesystem::path& path);

std::string format_coloring(const Coloring& c);
Coloring parse_coloring(std::string_view text);
Coloring read_coloring(const std::filesystem::path& path);
void write_coloring(const Coloring& c, const std::filesystem::path& path);

// Writes through a temporary sibling and renames, so a failed write leaves no
// partial file behind.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace dichro

#endif  // DICHRO_IO_HPP
