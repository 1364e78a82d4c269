#ifndef DICHRO_DIGRAPH_HPP
#define DICHRO_DIGRAPH_HPP

// Graph views shared by the analysis and solver code. Algorithms are written
// against the SuccessorGraph concept so they run unchanged on the implicit
// D(n, d) and on imported edge lists.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "dichro/construction.hpp"

namespace dichro {

template <class G>
concept SuccessorGraph = requires(const G& g, Code u) {
  { g.vertex_count() } -> std::convertible_to<Code>;
  { g.has_edge(u, u) } -> std::convertible_to<bool>;
  g.for_each_successor(u, [](Code) {});
};

// D(n, d) seen through its edge rule.
class ImplicitDigraph {
 public:
  explicit ImplicitDigraph(Params p) : p_(p) {}

  const Params& params() const { return p_; }
  Code vertex_count() const { return p_.vertex_count(); }
  bool has_edge(Code u, Code v) const { return dichro::has_edge(p_, Vertex{u}, Vertex{v}); }

  template <class F>
  void for_each_successor(Code u, F&& f) const {
    dichro::for_each_successor(p_, u, f);
  }

  // Successors of u that belong to the sorted set `members`, as ascending
  // positions into `members`. Costs O(d log |members|) plus the output.
  template <class F>
  void for_each_successor_in(Code u, std::span<const Code> members, F&& f) const {
    for (const Interval& iv : successor_blocks(p_, Vertex{u})) {
      auto it = std::lower_bound(members.begin(), members.end(), iv.begin);
      for (; it != members.end() && *it < iv.end; ++it) {
        f(static_cast<std::size_t>(it - members.begin()));
      }
    }
  }

 private:
  Params p_;
};

// Compressed adjacency built from an explicit edge list. Loops and
// duplicate edges are rejected by the builders in io.hpp, not here.
class ExplicitDigraph {
 public:
  ExplicitDigraph() = default;
  ExplicitDigraph(Code vertex_count, std::span<const Edge> edges);

  Code vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return heads_.size(); }
  bool has_edge(Code u, Code v) const;

  std::span<const Code> successors(Code u) const {
    return {heads_.data() + offsets_[u], heads_.data() + offsets_[u + 1]};
  }

  template <class F>
  void for_each_successor(Code u, F&& f) const {
    for (Code v : successors(u)) f(v);
  }

  template <class F>
  void for_each_successor_in(Code u, std::span<const Code> members, F&& f) const {
    for (Code v : successors(u)) {
      auto it = std::lower_bound(members.begin(), members.end(), v);
      if (it != members.end() && *it == v) f(static_cast<std::size_t>(it - members.begin()));
    }
  }

 private:
  Code vertex_count_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Code> heads_;
};

}  // namespace dichro

#endif  // DICHRO_DIGRAPH_HPP
