#include "dichro/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "dichro/errors.hpp"

namespace dichro {

namespace {

// Splits text into lines, dropping a single trailing newline.
std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) {
      out.push_back(text);
      break;
    }
    out.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  for (auto& line : out) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  return out;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_unsigned(std::string_view tok, std::string_view what) {
  if (!tok.empty() && tok.front() == '-') {
    throw FormatError("negative " + std::string(what) + " '" + std::string(tok) + "'");
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw FormatError("malformed " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return value;
}

Params parse_header(std::string_view line) {
  const auto toks = tokens_of(line);
  if (toks.size() != 2) throw FormatError("malformed header: expected 'n d'");
  const std::uint64_t n = parse_unsigned(toks[0], "header value");
  const std::uint64_t d = parse_unsigned(toks[1], "header value");
  try {
    return make_params(static_cast<long long>(std::min<std::uint64_t>(n, 1ull << 40)),
                       static_cast<long long>(std::min<std::uint64_t>(d, 1ull << 40)));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("malformed header: ") + e.what());
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

void write_edge_list(std::ostream& out, const Params& p, std::span<const Edge> edges) {
  out << format_edge_list(p, edges);
}

std::string format_edge_list(const Params& p, std::span<const Edge> edges) {
  std::string out = std::to_string(p.n()) + ' ' + std::to_string(p.d()) + '\n';
  out.reserve(out.size() + edges.size() * 12);
  for (const auto& [u, v] : edges) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

EdgeListFile parse_edge_list(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw FormatError("empty edge list");
  EdgeListFile out{parse_header(lines[0]), {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto toks = tokens_of(lines[i]);
    if (toks.empty()) continue;
    if (toks.size() != 2) {
      throw FormatError("line " + std::to_string(i + 1) + ": expected two vertex codes");
    }
    const Code u = parse_unsigned(toks[0], "vertex code");
    const Code v = parse_unsigned(toks[1], "vertex code");
    if (!out.params.contains(u) || !out.params.contains(v)) {
      throw FormatError("line " + std::to_string(i + 1) + ": vertex code out of range");
    }
    if (u == v) throw FormatError("line " + std::to_string(i + 1) + ": loops are not allowed");
    out.edges.emplace_back(u, v);
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

EdgeListFile read_edge_list(const std::filesystem::path& path) {
  return parse_edge_list(slurp(path));
}

std::string format_coloring(const Coloring& c) {
  const Params& p = c.params();
  std::string out = std::to_string(p.n()) + ' ' + std::to_string(p.d()) + '\n';
  for (std::size_t i = 0; i < c.colors().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c.colors()[i]);
  }
  out += '\n';
  return out;
}

Coloring parse_coloring(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw FormatError("empty coloring file");
  const Params p = parse_header(lines[0]);
  if (lines.size() < 2) throw FormatError("missing color line");
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (!tokens_of(lines[i]).empty()) throw FormatError("unexpected content after the color line");
  }
  const auto toks = tokens_of(lines[1]);
  if (toks.size() != p.vertex_count()) {
    throw FormatError("wrong count: expected " + std::to_string(p.vertex_count()) +
                      " colors, found " + std::to_string(toks.size()));
  }
  std::vector<Color> colors;
  colors.reserve(toks.size());
  for (auto tok : toks) {
    const std::uint64_t c = parse_unsigned(tok, "color");
    if (c > std::numeric_limits<Color>::max()) throw FormatError("color '" + std::string(tok) + "' too large");
    colors.push_back(static_cast<Color>(c));
  }
  return Coloring(p, std::move(colors));
}

Coloring read_coloring(const std::filesystem::path& path) {
  return parse_coloring(slurp(path));
}

void write_coloring(const Coloring& c, const std::filesystem::path& path) {
  write_file_atomically(path, format_coloring(c));
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error("failed writing '" + path.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot write '" + path.string() + "'");
  }
}

}  // namespace dichro
