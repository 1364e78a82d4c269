#ifndef DICHRO_CONSTRUCTION_HPP
#define DICHRO_CONSTRUCTION_HPP

// The digraph D(n, d).
//
// Vertices are the length-d sequences over {0..n-1}. There is an edge u -> v
// iff u != v and, at the first coordinate xi where they differ,
// v[xi] == u[xi] + 1 (mod n).
//
// A vertex is stored as its big-endian base-n code (coordinate 0 is the most
// significant digit), so every block V_s of sequences sharing a prefix s is a
// contiguous code interval. Adjacency is never stored: the successors of u
// with first difference at xi are exactly one such block, so the full
// out-neighbourhood is a union of d disjoint intervals.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dichro {

using Code = std::uint64_t;

// Codes must fit comfortably in 64 bits together with the edge count.
inline constexpr Code kMaxVertexCount = Code{1} << 32;

struct Vertex {
  Code code = 0;

  friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

// Half-open code interval [begin, end).
struct Interval {
  Code begin = 0;
  Code end = 0;

  constexpr Code size() const { return end - begin; }
  constexpr bool contains(Code c) const { return begin <= c && c < end; }
  friend constexpr bool operator==(Interval, Interval) = default;
};

class Params {
 public:
  unsigned n() const { return n_; }
  unsigned d() const { return d_; }
  Code vertex_count() const { return pow_[d_]; }
  // (n^d - 1) / (n - 1)
  Code out_degree() const { return out_degree_; }
  Code edge_count() const { return vertex_count() * out_degree_; }

  // n^k for 0 <= k <= d.
  Code power(unsigned k) const { return pow_[k]; }

  bool contains(Code c) const { return c < vertex_count(); }

  // Coordinate i of the vertex with the given code.
  unsigned coord(Code c, unsigned i) const {
    return static_cast<unsigned>((c / pow_[d_ - 1 - i]) % n_);
  }

  friend bool operator==(const Params& a, const Params& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }

 private:
  friend Params make_params(long long n, long long d);

  unsigned n_ = 0;
  unsigned d_ = 0;
  Code out_degree_ = 0;
  std::array<Code, 64> pow_{};
};

// Validates (n, d). Throws InvalidArgument for n < 2, d < 1, or instances with
// more than kMaxVertexCount vertices.
Params make_params(long long n, long long d);

// A prefix s of length 0..d naming the block V_s.
class BlockPrefix {
 public:
  BlockPrefix() = default;
  explicit BlockPrefix(std::vector<unsigned> coords) : coords_(std::move(coords)) {}

  std::size_t length() const { return coords_.size(); }
  std::span<const unsigned> coords() const { return coords_; }
  unsigned operator[](std::size_t i) const { return coords_[i]; }

  BlockPrefix extended(unsigned k) const;

  friend bool operator==(const BlockPrefix&, const BlockPrefix&) = default;

 private:
  std::vector<unsigned> coords_;
};

std::string to_string(const BlockPrefix& s);

// Vertex codec. encode throws InvalidArgument on wrong length or digits >= n.
Vertex encode(const Params& p, std::span<const unsigned> coords);
std::vector<unsigned> decode(const Params& p, Vertex v);
// Throws InvalidArgument if the code is out of range.
Vertex vertex(const Params& p, Code code);

// Prefix of length `length` of v.
BlockPrefix prefix_of(const Params& p, Vertex v, unsigned length);

// Throws InvalidArgument if s is longer than d or has digits >= n.
Interval block_interval(const Params& p, const BlockPrefix& s);
bool in_block(const Params& p, const BlockPrefix& s, Vertex v);

bool has_edge(const Params& p, Vertex u, Vertex v);

// The d disjoint blocks making up the out- (resp. in-) neighbourhood of a
// vertex, sorted by begin. The block for first difference xi has size
// n^(d-1-xi).
class NeighbourBlocks {
 public:
  const Interval* begin() const { return blocks_.data(); }
  const Interval* end() const { return blocks_.data() + count_; }
  std::size_t size() const { return count_; }
  const Interval& operator[](std::size_t i) const { return blocks_[i]; }

 private:
  friend NeighbourBlocks successor_blocks(const Params&, Vertex);
  friend NeighbourBlocks predecessor_blocks(const Params&, Vertex);

  std::array<Interval, 64> blocks_{};
  std::size_t count_ = 0;
};

NeighbourBlocks successor_blocks(const Params& p, Vertex u);
NeighbourBlocks predecessor_blocks(const Params& p, Vertex u);

// Ascending code order.
std::vector<Vertex> successors(const Params& p, Vertex u);
std::vector<Vertex> predecessors(const Params& p, Vertex u);

// Calls f(Code) for every successor of u in ascending code order.
template <class F>
void for_each_successor(const Params& p, Code u, F&& f) {
  for (const Interval& iv : successor_blocks(p, Vertex{u})) {
    for (Code c = iv.begin; c < iv.end; ++c) {
      f(c);
    }
  }
}

// s concatenated with v. The map is an isomorphism from D(n, d - |s|) onto
// D(n, d)[V_s]. Throws InvalidArgument on modulus or length mismatch.
Vertex embed(const Params& big, const BlockPrefix& s, const Params& small, Vertex v);

using Edge = std::pair<Code, Code>;

// Every edge, sorted by (tail, head). Throws CapExceeded if
// edge_count() > edge_cap.
std::vector<Edge> materialize(const Params& p, std::uint64_t edge_cap);

inline constexpr std::uint64_t kDefaultEdgeCap = 10'000'000;

}  // namespace dichro

#endif  // DICHRO_CONSTRUCTION_HPP
