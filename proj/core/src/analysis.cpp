#include "dichro/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "dichro/errors.hpp"

namespace dichro {

std::string format_cycle(const CycleWitness& w) {
  std::string out;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (i) out += "->";
    out += std::to_string(w.vertices[i]);
  }
  return out;
}

namespace {

template <SuccessorGraph G>
std::optional<std::string> defect_of(const G& g, const CycleWitness& w) {
  const auto& vs = w.vertices;
  if (vs.size() < 2) return "cycle has fewer than 2 vertices";
  std::unordered_set<Code> seen;
  for (Code v : vs) {
    if (v >= g.vertex_count()) return "vertex " + std::to_string(v) + " out of range";
    if (!seen.insert(v).second) return "vertex " + std::to_string(v) + " repeated";
  }
  for (std::size_t k = 0; k < vs.size(); ++k) {
    const Code u = vs[k];
    const Code v = vs[(k + 1) % vs.size()];
    if (!g.has_edge(u, v)) {
      return "missing edge " + std::to_string(u) + "->" + std::to_string(v);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> cycle_defect(const Params& p, const CycleWitness& w) {
  return defect_of(ImplicitDigraph(p), w);
}

std::optional<std::string> cycle_defect(const ExplicitDigraph& g, const CycleWitness& w) {
  return defect_of(g, w);
}

void check_cycle(const Params& p, const CycleWitness& w) {
  if (auto defect = cycle_defect(p, w)) throw CorruptWitness("invalid cycle witness: " + *defect);
}

void check_cycle(const ExplicitDigraph& g, const CycleWitness& w) {
  if (auto defect = cycle_defect(g, w)) throw CorruptWitness("invalid cycle witness: " + *defect);
}

// ---------------------------------------------------------------------------
// Girth

namespace {

constexpr std::uint64_t kNoCycle = std::numeric_limits<std::uint64_t>::max();

// Per-worker BFS scratch, reset lazily through the touched list.
struct BfsScratch {
  std::vector<std::uint64_t> dist;
  std::vector<Code> parent;
  std::vector<Code> queue;

  explicit BfsScratch(Code n) : dist(n, kNoCycle), parent(n, 0) {}

  void reset() {
    for (Code v : queue) dist[v] = kNoCycle;
    queue.clear();
  }
};

// Length of the shortest cycle through `start` if it is at most `limit`,
// else kNoCycle. On success the cycle is written to `path`.
template <SuccessorGraph G>
std::uint64_t shortest_cycle_through(const G& g, Code start, std::uint64_t limit,
                                     BfsScratch& s, std::vector<Code>* path) {
  s.reset();
  s.dist[start] = 0;
  s.queue.push_back(start);
  for (std::size_t head = 0; head < s.queue.size(); ++head) {
    const Code u = s.queue[head];
    const std::uint64_t du = s.dist[u];
    if (du + 1 > limit) break;
    bool closed = false;
    g.for_each_successor(u, [&](Code v) {
      if (closed) return;
      if (v == start) {
        closed = true;
        return;
      }
      if (s.dist[v] == kNoCycle) {
        s.dist[v] = du + 1;
        s.parent[v] = u;
        s.queue.push_back(v);
      }
    });
    if (closed) {
      if (path) {
        path->clear();
        for (Code x = u; x != start; x = s.parent[x]) path->push_back(x);
        path->push_back(start);
        std::reverse(path->begin(), path->end());
      }
      return du + 1;
    }
  }
  return kNoCycle;
}

template <SuccessorGraph G>
std::optional<GirthResult> girth_search(const G& g, std::uint64_t lower_bound, unsigned workers) {
  const Code n = g.vertex_count();
  struct Best {
    std::uint64_t length = kNoCycle;
    Code start = std::numeric_limits<Code>::max();
  };

  Best best;
  if (workers <= 1) {
    BfsScratch scratch(n);
    for (Code start = 0; start < n; ++start) {
      // Strictly shorter only: ties keep the smaller start.
      const std::uint64_t limit = best.length == kNoCycle ? kNoCycle : best.length - 1;
      const std::uint64_t len = shortest_cycle_through(g, start, limit, scratch, nullptr);
      if (len < best.length) best = {len, start};
      if (best.length <= lower_bound) break;
    }
  } else {
    std::mutex mu;
    std::atomic<Code> next{0};
    // Starts above this one cannot improve on a cycle at the lower bound.
    std::atomic<Code> stop_after{std::numeric_limits<Code>::max()};
    auto work = [&] {
      BfsScratch scratch(n);
      for (;;) {
        const Code start = next.fetch_add(1);
        if (start >= n || start > stop_after.load()) return;
        std::uint64_t limit;
        {
          std::lock_guard lock(mu);
          limit = best.length;
        }
        const std::uint64_t len = shortest_cycle_through(g, start, limit, scratch, nullptr);
        if (len == kNoCycle) continue;
        std::lock_guard lock(mu);
        if (len < best.length || (len == best.length && start < best.start)) best = {len, start};
        if (len <= lower_bound) {
          Code cur = stop_after.load();
          while (start < cur && !stop_after.compare_exchange_weak(cur, start)) {
          }
        }
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    pool.clear();
  }

  if (best.length == kNoCycle) return std::nullopt;
  BfsScratch scratch(n);
  GirthResult out;
  out.length = shortest_cycle_through(g, best.start, best.length, scratch, &out.witness.vertices);
  return out;
}

}  // namespace

GirthResult directed_girth(const Params& p, const GirthOptions& opts) {
  const std::uint64_t lb = opts.use_lower_bound ? p.n() : 0;
  auto result = girth_search(ImplicitDigraph(p), lb, opts.workers);
  // D(n, d) always contains the n-cycle of constant sequences.
  if (!result) throw std::logic_error("directed_girth: no cycle found in D(n, d)");
  return *std::move(result);
}

std::optional<GirthResult> directed_girth(const ExplicitDigraph& g, unsigned workers) {
  return girth_search(g, 0, workers);
}

// ---------------------------------------------------------------------------
// Acyclicity of induced subdigraphs

namespace {

template <SuccessorGraph G>
AcyclicityResult acyclic_search(const G& g, std::span<const Code> subset) {
  std::vector<Code> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.back() >= g.vertex_count()) {
    throw InvalidArgument("subset contains code " + std::to_string(members.back()) +
                          " outside [0, " + std::to_string(g.vertex_count()) + ")");
  }

  enum : std::uint8_t { kWhite, kGray, kBlack };
  const std::size_t m = members.size();
  std::vector<std::uint8_t> state(m, kWhite);
  std::vector<std::size_t> depth_of(m, 0);

  // Successor positions of each open frame live in pool[begin, end).
  struct Frame {
    std::size_t pos;
    std::size_t begin;
    std::size_t cursor;
    std::size_t end;
  };
  std::vector<Frame> stack;
  std::vector<std::uint32_t> pool;

  auto push = [&](std::size_t pos) {
    state[pos] = kGray;
    depth_of[pos] = stack.size();
    const std::size_t begin = pool.size();
    g.for_each_successor_in(members[pos], members,
                            [&](std::size_t w) { pool.push_back(static_cast<std::uint32_t>(w)); });
    stack.push_back(Frame{pos, begin, begin, pool.size()});
  };

  for (std::size_t root = 0; root < m; ++root) {
    if (state[root] != kWhite) continue;
    push(root);
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.cursor == top.end) {
        state[top.pos] = kBlack;
        pool.resize(top.begin);
        stack.pop_back();
        continue;
      }
      const std::size_t w = pool[top.cursor++];
      if (state[w] == kWhite) {
        push(w);
      } else if (state[w] == kGray) {
        CycleWitness cycle;
        for (std::size_t i = depth_of[w]; i < stack.size(); ++i) {
          cycle.vertices.push_back(members[stack[i].pos]);
        }
        return cycle;
      }
    }
  }
  return Acyclic{};
}

}  // namespace

AcyclicityResult is_acyclic_subset(const Params& p, std::span<const Code> subset) {
  return acyclic_search(ImplicitDigraph(p), subset);
}

AcyclicityResult is_acyclic_subset(const ExplicitDigraph& g, std::span<const Code> subset) {
  return acyclic_search(g, subset);
}

// ---------------------------------------------------------------------------
// Block trace

BlockTrace block_trace(const Params& p, const CycleWitness& w) {
  check_cycle(p, w);
  const Code first = w.vertices.front();
  unsigned lcp = p.d();
  for (Code v : w.vertices) {
    unsigned i = 0;
    while (i < lcp && p.coord(v, i) == p.coord(first, i)) ++i;
    lcp = i;
  }
  BlockTrace out;
  out.lcp = prefix_of(p, Vertex{first}, lcp);
  out.trace.reserve(w.vertices.size());
  for (Code v : w.vertices) out.trace.push_back(p.coord(v, lcp));
  return out;
}

std::optional<std::string> trace_law_violation(const Params& p, const BlockTrace& t) {
  std::vector<bool> seen(p.n(), false);
  for (unsigned k : t.trace) {
    if (k >= p.n()) return "trace value " + std::to_string(k) + " out of range";
    seen[k] = true;
  }
  for (unsigned k = 0; k < p.n(); ++k) {
    if (!seen[k]) return "cycle never enters child block " + std::to_string(k);
  }
  const std::size_t len = t.trace.size();
  for (std::size_t i = 0; i < len; ++i) {
    const unsigned a = t.trace[i];
    const unsigned b = t.trace[(i + 1) % len];
    if (a != b && b != (a + 1) % p.n()) {
      return "trace steps from " + std::to_string(a) + " to " + std::to_string(b);
    }
  }
  return std::nullopt;
}

}  // namespace dichro
