#include "dichro/construction.hpp"

#include <algorithm>
#include <string>

#include "dichro/errors.hpp"

namespace dichro {

Params make_params(long long n, long long d) {
  if (n < 2) {
    throw InvalidArgument("n must be at least 2 (got " + std::to_string(n) + ")");
  }
  if (d < 1) {
    throw InvalidArgument("d must be at least 1 (got " + std::to_string(d) + ")");
  }
  Params p;
  p.pow_[0] = 1;
  for (long long k = 1; k <= d; ++k) {
    if (static_cast<unsigned long long>(n) > kMaxVertexCount / p.pow_[k - 1]) {
      throw InvalidArgument("instance " + std::to_string(n) + "^" + std::to_string(d) +
                            " exceeds the vertex limit of 2^32");
    }
    p.pow_[k] = p.pow_[k - 1] * static_cast<Code>(n);
  }
  p.n_ = static_cast<unsigned>(n);
  p.d_ = static_cast<unsigned>(d);
  p.out_degree_ = (p.pow_[p.d_] - 1) / (p.n_ - 1);
  return p;
}

BlockPrefix BlockPrefix::extended(unsigned k) const {
  std::vector<unsigned> c = coords_;
  c.push_back(k);
  return BlockPrefix(std::move(c));
}

std::string to_string(const BlockPrefix& s) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  out += '>';
  return out;
}

Vertex encode(const Params& p, std::span<const unsigned> coords) {
  if (coords.size() != p.d()) {
    throw InvalidArgument("vertex has " + std::to_string(coords.size()) +
                          " coordinates, expected " + std::to_string(p.d()));
  }
  Code code = 0;
  for (unsigned a : coords) {
    if (a >= p.n()) {
      throw InvalidArgument("coordinate " + std::to_string(a) + " out of range for n=" +
                            std::to_string(p.n()));
    }
    code = code * p.n() + a;
  }
  return Vertex{code};
}

std::vector<unsigned> decode(const Params& p, Vertex v) {
  std::vector<unsigned> out(p.d());
  Code c = v.code;
  for (unsigned i = p.d(); i-- > 0;) {
    out[i] = static_cast<unsigned>(c % p.n());
    c /= p.n();
  }
  return out;
}

Vertex vertex(const Params& p, Code code) {
  if (!p.contains(code)) {
    throw InvalidArgument("vertex code " + std::to_string(code) + " out of range [0, " +
                          std::to_string(p.vertex_count()) + ")");
  }
  return Vertex{code};
}

BlockPrefix prefix_of(const Params& p, Vertex v, unsigned length) {
  std::vector<unsigned> c = decode(p, v);
  c.resize(length);
  return BlockPrefix(std::move(c));
}

Interval block_interval(const Params& p, const BlockPrefix& s) {
  if (s.length() > p.d()) {
    throw InvalidArgument("block prefix " + to_string(s) + " is longer than d=" +
                          std::to_string(p.d()));
  }
  Code head = 0;
  for (unsigned a : s.coords()) {
    if (a >= p.n()) {
      throw InvalidArgument("block prefix " + to_string(s) + " has a digit >= n");
    }
    head = head * p.n() + a;
  }
  const Code size = p.power(p.d() - static_cast<unsigned>(s.length()));
  return Interval{head * size, head * size + size};
}

bool in_block(const Params& p, const BlockPrefix& s, Vertex v) {
  return block_interval(p, s).contains(v.code);
}

bool has_edge(const Params& p, Vertex u, Vertex v) {
  if (u == v) return false;
  for (unsigned xi = 0; xi < p.d(); ++xi) {
    const unsigned a = p.coord(u.code, xi);
    const unsigned b = p.coord(v.code, xi);
    if (a != b) return b == (a + 1) % p.n();
  }
  return false;
}

namespace {

// Block of vertices agreeing with u before xi and holding `digit` at xi.
Interval block_at(const Params& p, Code u, unsigned xi, unsigned digit) {
  const Code tail = p.power(p.d() - 1 - xi);
  const Code head = u / (tail * p.n());
  const Code begin = (head * p.n() + digit) * tail;
  return Interval{begin, begin + tail};
}

}  // namespace

NeighbourBlocks successor_blocks(const Params& p, Vertex u) {
  NeighbourBlocks out;
  for (unsigned xi = 0; xi < p.d(); ++xi) {
    const unsigned next = (p.coord(u.code, xi) + 1) % p.n();
    out.blocks_[out.count_++] = block_at(p, u.code, xi, next);
  }
  std::sort(out.blocks_.begin(), out.blocks_.begin() + out.count_,
            [](Interval a, Interval b) { return a.begin < b.begin; });
  return out;
}

NeighbourBlocks predecessor_blocks(const Params& p, Vertex u) {
  NeighbourBlocks out;
  for (unsigned xi = 0; xi < p.d(); ++xi) {
    const unsigned prev = (p.coord(u.code, xi) + p.n() - 1) % p.n();
    out.blocks_[out.count_++] = block_at(p, u.code, xi, prev);
  }
  std::sort(out.blocks_.begin(), out.blocks_.begin() + out.count_,
            [](Interval a, Interval b) { return a.begin < b.begin; });
  return out;
}

namespace {

std::vector<Vertex> expand(const NeighbourBlocks& blocks, Code count) {
  std::vector<Vertex> out;
  out.reserve(count);
  for (const Interval& iv : blocks) {
    for (Code c = iv.begin; c < iv.end; ++c) out.push_back(Vertex{c});
  }
  return out;
}

}  // namespace

std::vector<Vertex> successors(const Params& p, Vertex u) {
  return expand(successor_blocks(p, u), p.out_degree());
}

std::vector<Vertex> predecessors(const Params& p, Vertex u) {
  return expand(predecessor_blocks(p, u), p.out_degree());
}

Vertex embed(const Params& big, const BlockPrefix& s, const Params& small, Vertex v) {
  if (big.n() != small.n()) {
    throw InvalidArgument("embed: modulus mismatch (" + std::to_string(small.n()) + " vs " +
                          std::to_string(big.n()) + ")");
  }
  if (s.length() + small.d() != big.d()) {
    throw InvalidArgument("embed: prefix length " + std::to_string(s.length()) + " plus depth " +
                          std::to_string(small.d()) + " does not equal " +
                          std::to_string(big.d()));
  }
  if (!small.contains(v.code)) {
    throw InvalidArgument("embed: vertex code out of range");
  }
  return Vertex{block_interval(big, s).begin + v.code};
}

std::vector<Edge> materialize(const Params& p, std::uint64_t edge_cap) {
  if (p.edge_count() > edge_cap) {
    throw CapExceeded("instance has " + std::to_string(p.edge_count()) +
                      " edges, above the materialization cap of " + std::to_string(edge_cap));
  }
  std::vector<Edge> edges;
  edges.reserve(p.edge_count());
  for (Code u = 0; u < p.vertex_count(); ++u) {
    for_each_successor(p, u, [&](Code v) { edges.emplace_back(u, v); });
  }
  return edges;
}

}  // namespace dichro
