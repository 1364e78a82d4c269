#include "dichro/digraph.hpp"

#include "dichro/errors.hpp"

namespace dichro {

ExplicitDigraph::ExplicitDigraph(Code vertex_count, std::span<const Edge> edges)
    : vertex_count_(vertex_count), offsets_(vertex_count + 1, 0) {
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidArgument("edge " + std::to_string(u) + "->" + std::to_string(v) +
                            " out of range");
    }
    ++offsets_[u + 1];
  }
  for (Code u = 0; u < vertex_count; ++u) offsets_[u + 1] += offsets_[u];
  heads_.resize(edges.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) heads_[fill[u]++] = v;
  for (Code u = 0; u < vertex_count; ++u) {
    std::sort(heads_.begin() + offsets_[u], heads_.begin() + offsets_[u + 1]);
  }
}

bool ExplicitDigraph::has_edge(Code u, Code v) const {
  if (u >= vertex_count_) return false;
  const auto succ = successors(u);
  return std::binary_search(succ.begin(), succ.end(), v);
}

}  // namespace dichro
