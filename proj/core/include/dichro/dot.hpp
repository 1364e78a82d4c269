#ifndef DICHRO_DOT_HPP
#define DICHRO_DOT_HPP

#include <string>

#include "dichro/construction.hpp"

namespace dichro {

struct DotOptions {
  // Blocks with prefixes of length 1..depth become nested clusters.
  unsigned depth = 1;
  // Vertices and the edges inside the innermost clusters are drawn one by
  // one only up to this many vertices; larger instances get one box per
  // innermost cluster.
  Code vertex_limit = 64;
  // Refuse to draw more clusters than this.
  Code cluster_limit = 4096;
};

// Graphviz rendering of D(n, d) as nested blocks. Between sibling blocks
// V_{s k} and V_{s k+1} every edge is present, so each such bundle is drawn
// as a single bold edge between the two clusters (cluster_<prefix> with
// digits joined by '_', e.g. cluster_2_0). Throws InvalidArgument if depth > d
// and CapExceeded above cluster_limit.
std::string export_dot(const Params& p, const DotOptions& opts);

}  // namespace dichro

#endif  // DICHRO_DOT_HPP
