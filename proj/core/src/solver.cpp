#include "dichro/solver.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dichro/errors.hpp"

namespace dichro {

namespace {

constexpr Color kUnassigned = std::numeric_limits<Color>::max();

// Node accounting shared by the workers of one decision.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

  void spend() {
    const std::uint64_t used = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (limit_ != 0 && used > limit_) {
      throw CapExceeded("solver node budget of " + std::to_string(limit_) + " exhausted");
    }
  }
  std::uint64_t used() const { return used_.load(); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

// ---------------------------------------------------------------------------
// Conflict models. Each one tracks the partial coloring of vertices 0..v and
// answers whether the latest assignment closed a monochromatic cycle.

// D(n, d) with per-block color counters. Internal blocks (prefix length
// 0..d-1) are numbered level by level; there are (n^d - 1) / (n - 1) of them.
class BlockModel {
 public:
  BlockModel(const Params& p, unsigned k, std::vector<unsigned> child_need, bool lookahead)
      : p_(p),
        k_(k),
        need_(std::move(child_need)),
        lookahead_(lookahead),
        offset_(p.d() + 1, 0),
        present_(),
        covered_() {
    for (unsigned a = 1; a <= p.d(); ++a) offset_[a] = offset_[a - 1] + p.power(a - 1);
    const std::size_t cells = static_cast<std::size_t>(offset_[p.d()]) * k;
    present_.assign(cells, 0);
    covered_.assign(cells, 0);
    allowed_.assign(k, 1);
  }

  Code vertex_count() const { return p_.vertex_count(); }

  // Returns false if v now closes a cycle of color c. Always leaves the
  // counters updated; undo with unassign.
  bool assign(Code v, Color c) {
    bool ok = true;
    for (unsigned a = p_.d(); a-- > 0;) {
      if (a + 1 < p_.d() && ++present_[cell(a + 1, v, c)] != 1) break;
      if (++covered_[cell(a, v, c)] == p_.n()) ok = false;
    }
    return ok;
  }

  void unassign(Code v, Color c) {
    for (unsigned a = p_.d(); a-- > 0;) {
      if (a + 1 < p_.d() && --present_[cell(a + 1, v, c)] != 0) break;
      --covered_[cell(a, v, c)];
    }
  }

  // Pigeonhole check along the ancestors of the next vertex to be colored.
  //
  // At an ancestor block with children 0..j-1 finished, child j partial and
  // the rest untouched, let r bound the block's final palette and q be the
  // child requirement. Each child leaves out at most r - q colors, so
  //   (A) colors common to the finished children number at most
  //       (n - j) * (r - q), and
  //   (B) colors common to children 0..j number at most (n - j - 1) * (r - q).
  // (B) caps how many more common colors child j may take, and the block can
  // only open r - |colors used so far| new ones. Together these bound child
  // j's palette, which becomes r one level down.
  bool lookahead_ok(Code next) {
    if (!lookahead_ || next >= p_.vertex_count()) return true;
    std::fill(allowed_.begin(), allowed_.end(), 1);
    const long long n = p_.n();
    long long r = k_;
    for (unsigned a = 0; a < p_.d(); ++a) {
      const long long j = p_.coord(next, a);
      const long long q = need_[p_.d() - a - 1];
      long long common_done = 0;
      long long common_all = 0;
      long long used = 0;         // colors present anywhere in the block
      long long in_child = 0;     // already in child j
      long long add_used = 0;     // common to finished children, used, not in j
      long long add_fresh = 0;    // ... and not used yet (only when j == 0)
      long long other_used = 0;   // used elsewhere in the block, not common
      long long other_fresh = 0;  // unused, not common
      for (Color c = 0; c < k_; ++c) {
        if (!allowed_[c]) continue;
        const long long cov = covered_[cell(a, next, c)];
        const bool in_j = a + 1 < p_.d() && present_[cell(a + 1, next, c)] != 0;
        const bool done = cov - in_j == j;
        used += cov > 0;
        common_done += done;
        common_all += cov == j + 1;
        if (in_j) {
          ++in_child;
        } else if (done) {
          ++(cov > 0 ? add_used : add_fresh);
        } else {
          ++(cov > 0 ? other_used : other_fresh);
        }
      }
      // With no finished child the common set is the whole final palette.
      if (j == 0) common_done = std::min(common_done, r);
      if (common_done > (n - j) * (r - q)) return false;
      const long long limit = (n - j - 1) * (r - q);
      if (common_all > limit) return false;
      const long long slack = limit - common_all;
      const long long fresh_cap = r - used;
      if (fresh_cap < 0) return false;
      if (slack == 0) {
        for (Color c = 0; c < k_; ++c) {
          if (!allowed_[c]) continue;
          const long long cov = covered_[cell(a, next, c)];
          const bool in_j = a + 1 < p_.d() && present_[cell(a + 1, next, c)] != 0;
          if (!in_j && cov - in_j == j) allowed_[c] = 0;
        }
      }
      const long long by_slack = in_child + other_used + std::min(slack, add_used + add_fresh) +
                                 std::min(other_fresh, fresh_cap);
      const long long by_fresh =
          in_child + other_used + add_used + std::min(add_fresh + other_fresh, fresh_cap);
      r = std::min({r, by_slack, by_fresh});
      if (r < q) return false;
    }
    return true;
  }

 private:
  std::size_t cell(unsigned depth, Code v, Color c) const {
    const Code node = offset_[depth] + v / p_.power(p_.d() - depth);
    return static_cast<std::size_t>(node) * k_ + c;
  }

  Params p_;
  unsigned k_;
  std::vector<unsigned> need_;  // need_[h]: colors required by a depth-h block
  bool lookahead_;
  std::vector<Code> offset_;
  std::vector<std::uint16_t> present_;  // vertices of color c in block
  std::vector<std::uint16_t> covered_;  // children of block containing color c
  std::vector<std::uint8_t> allowed_;
};

// Arbitrary digraph: a new assignment v := c closes a cycle iff v can reach
// itself through vertices already colored c.
class ReachModel {
 public:
  explicit ReachModel(const ExplicitDigraph& g) : g_(&g), colors_(g.vertex_count(), kUnassigned) {}

  Code vertex_count() const { return g_->vertex_count(); }

  bool assign(Code v, Color c) {
    colors_[v] = c;
    ++epoch_;
    if (mark_.size() != colors_.size()) mark_.assign(colors_.size(), 0);
    stack_.clear();
    stack_.push_back(v);
    while (!stack_.empty()) {
      const Code u = stack_.back();
      stack_.pop_back();
      for (Code w : g_->successors(u)) {
        if (colors_[w] != c) continue;
        if (w == v) return false;
        if (mark_[w] == epoch_) continue;
        mark_[w] = epoch_;
        stack_.push_back(w);
      }
    }
    return true;
  }

  void unassign(Code v, Color) { colors_[v] = kUnassigned; }
  bool lookahead_ok(Code) { return true; }

 private:
  const ExplicitDigraph* g_;
  std::vector<Color> colors_;
  std::vector<std::uint64_t> mark_;
  std::vector<Code> stack_;
  std::uint64_t epoch_ = 0;
};

// ---------------------------------------------------------------------------
// Backtracking engine

template <class Model>
class Backtracker {
 public:
  Backtracker(Model& model, unsigned k, NodeBudget& budget, const std::atomic<bool>* stop)
      : model_(model), k_(k), budget_(budget), stop_(stop), colors_(model.vertex_count(), kUnassigned) {}

  // Replays a fixed prefix of assignments. False if it is inconsistent.
  bool replay(const std::vector<Color>& prefix, unsigned& used) {
    used = 0;
    for (Code v = 0; v < prefix.size(); ++v) {
      const bool ok = model_.assign(v, prefix[v]);
      colors_[v] = prefix[v];
      used = std::max<unsigned>(used, prefix[v] + 1);
      if (!ok) return false;
    }
    return model_.lookahead_ok(prefix.size());
  }

  // Depth-first completion from vertex v with `used` colors opened.
  bool complete(Code v, unsigned used) {
    if (v == model_.vertex_count()) return true;
    if (stop_ && stop_->load(std::memory_order_relaxed)) return false;
    const unsigned options = std::min(used + 1, k_);
    for (Color c = 0; c < options; ++c) {
      budget_.spend();
      const bool ok = model_.assign(v, c);
      colors_[v] = c;
      if (ok && model_.lookahead_ok(v + 1) && complete(v + 1, std::max<unsigned>(used, c + 1))) {
        return true;
      }
      model_.unassign(v, c);
      colors_[v] = kUnassigned;
    }
    return false;
  }

  // Consistent prefixes of length `depth`, in search order.
  void frontier(Code v, unsigned used, Code depth, std::vector<std::vector<Color>>& out) {
    if (v == depth || v == model_.vertex_count()) {
      out.emplace_back(colors_.begin(), colors_.begin() + v);
      return;
    }
    const unsigned options = std::min(used + 1, k_);
    for (Color c = 0; c < options; ++c) {
      budget_.spend();
      const bool ok = model_.assign(v, c);
      colors_[v] = c;
      if (ok && model_.lookahead_ok(v + 1)) frontier(v + 1, std::max<unsigned>(used, c + 1), depth, out);
      model_.unassign(v, c);
      colors_[v] = kUnassigned;
    }
  }

  const std::vector<Color>& colors() const { return colors_; }

 private:
  Model& model_;
  unsigned k_;
  NodeBudget& budget_;
  const std::atomic<bool>* stop_;
  std::vector<Color> colors_;
};

template <class MakeModel>
std::optional<std::vector<Color>> decide(MakeModel make_model, Code vertex_count, unsigned k,
                                         const SolverBudget& budget, SolverStats* stats) {
  NodeBudget nodes(budget.node_limit);
  auto finish = [&](std::optional<std::vector<Color>> r) {
    if (stats) stats->nodes += nodes.used();
    return r;
  };
  if (k == 0) return finish(vertex_count == 0 ? std::optional(std::vector<Color>{}) : std::nullopt);

  if (budget.workers <= 1) {
    auto model = make_model();
    Backtracker search(model, k, nodes, nullptr);
    if (!model.lookahead_ok(0)) return finish(std::nullopt);
    if (search.complete(0, 0)) return finish(search.colors());
    return finish(std::nullopt);
  }

  // Split the tree at a shallow depth and hand the subtrees out.
  std::vector<std::vector<Color>> work;
  {
    auto model = make_model();
    Backtracker search(model, k, nodes, nullptr);
    if (!model.lookahead_ok(0)) return finish(std::nullopt);
    for (Code depth = 1; depth <= vertex_count; ++depth) {
      work.clear();
      search.frontier(0, 0, depth, work);
      if (work.size() >= 4 * budget.workers || work.empty() || depth == vertex_count) break;
    }
  }

  std::atomic<bool> stop{false};
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::optional<std::vector<Color>> found;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      auto model = make_model();
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= work.size() || stop.load()) return;
        Backtracker search(model, k, nodes, &stop);
        unsigned used = 0;
        // Models are reused, so rebuild from scratch for each subtree.
        model = make_model();
        if (!search.replay(work[i], used)) continue;
        if (search.complete(work[i].size(), used)) {
          std::lock_guard lock(mu);
          if (!found) found = search.colors();
          stop = true;
          return;
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      stop = true;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < budget.workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return finish(std::move(found));
}

void check_vertex_cap(Code vertex_count, const SolverBudget& budget) {
  if (vertex_count > budget.vertex_cap) {
    throw CapExceeded("instance has " + std::to_string(vertex_count) +
                      " vertices, above the solver cap of " + std::to_string(budget.vertex_cap));
  }
  if (vertex_count > std::numeric_limits<std::uint16_t>::max()) {
    throw CapExceeded("exact solver supports at most 65535 vertices");
  }
}

std::optional<Coloring> decide_blocks(const Params& p, unsigned k, const std::vector<unsigned>& need,
                                      const SolverBudget& budget, SolverStats* stats) {
  auto r = decide([&] { return BlockModel(p, k, need, budget.lookahead); }, p.vertex_count(), k,
                  budget, stats);
  if (!r) return std::nullopt;
  return Coloring(p, std::move(*r));
}

unsigned first_candidate(const Params& p) {
  return p.n() == 2 ? static_cast<unsigned>(p.vertex_count()) : p.d() + 1;
}

// Exact chi of D(n, d) given exact values for all smaller depths.
ChiResult solve_one(const Params& p, const std::vector<unsigned>& need, const SolverBudget& budget) {
  SolverStats stats;
  for (unsigned k = first_candidate(p);; ++k) {
    if (auto coloring = decide_blocks(p, k, need, budget, &stats)) {
      // The search started at a proven lower bound; confirm it explicitly.
      if (k == first_candidate(p) && k > 1 && decide_blocks(p, k - 1, need, budget, &stats)) {
        throw std::logic_error("solver found a coloring below the proven lower bound");
      }
      return ChiResult{k, canonicalize(*coloring), budget.workers <= 1, stats};
    }
  }
}

std::vector<unsigned> depth_needs(unsigned n, unsigned d, const SolverBudget& budget) {
  // need[h] = chi of a depth-h block; a single vertex needs one color.
  std::vector<unsigned> need{1};
  for (unsigned h = 1; h < d; ++h) {
    need.push_back(solve_one(make_params(n, h), need, budget).chi);
  }
  return need;
}

}  // namespace

std::vector<unsigned> solve_depths(unsigned n, unsigned d, const SolverBudget& budget) {
  check_vertex_cap(make_params(n, d).vertex_count(), budget);
  return depth_needs(n, d + 1, budget);
}

ChiResult dichromatic_number(const Params& p, const SolverBudget& budget) {
  check_vertex_cap(p.vertex_count(), budget);
  return solve_one(p, depth_needs(p.n(), p.d(), budget), budget);
}

std::optional<Coloring> find_acyclic_coloring(const Params& p, unsigned k, const SolverBudget& budget,
                                              SolverStats* stats) {
  check_vertex_cap(p.vertex_count(), budget);
  std::vector<unsigned> need = budget.lookahead ? depth_needs(p.n(), p.d(), budget)
                                                : std::vector<unsigned>(p.d(), 1);
  return decide_blocks(p, k, need, budget, stats);
}

std::optional<std::vector<Color>> find_acyclic_coloring(const ExplicitDigraph& g, unsigned k,
                                                        const SolverBudget& budget, SolverStats* stats) {
  check_vertex_cap(g.vertex_count(), budget);
  return decide([&] { return ReachModel(g); }, g.vertex_count(), k, budget, stats);
}

GraphChiResult dichromatic_number(const ExplicitDigraph& g, const SolverBudget& budget) {
  check_vertex_cap(g.vertex_count(), budget);
  SolverStats stats;
  for (unsigned k = g.vertex_count() == 0 ? 0 : 1;; ++k) {
    if (auto colors = find_acyclic_coloring(g, k, budget, &stats)) {
      return GraphChiResult{k, std::move(*colors), stats};
    }
  }
}

// ---------------------------------------------------------------------------
// Brute force

namespace {

// Kahn's algorithm on the class `members` using a dense adjacency matrix.
bool class_is_acyclic(const std::vector<std::vector<bool>>& adj, const std::vector<Code>& members) {
  const std::size_t m = members.size();
  std::vector<unsigned> indeg(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (adj[members[i]][members[j]]) ++indeg[j];
  std::vector<std::size_t> ready;
  for (std::size_t j = 0; j < m; ++j)
    if (indeg[j] == 0) ready.push_back(j);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t i = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t j = 0; j < m; ++j)
      if (adj[members[i]][members[j]] && --indeg[j] == 0) ready.push_back(j);
  }
  return removed == m;
}

}  // namespace

unsigned brute_force_chi(const Params& p) {
  const Code n = p.vertex_count();
  if (n > kBruteForceVertexCap) {
    throw CapExceeded("brute-force oracle is limited to " + std::to_string(kBruteForceVertexCap) +
                      " vertices (instance has " + std::to_string(n) + ")");
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (Code u = 0; u < n; ++u)
    for (Code v = 0; v < n; ++v) adj[u][v] = has_edge(p, Vertex{u}, Vertex{v});

  for (unsigned k = 1; k <= n; ++k) {
    // Restricted growth strings: colors[i] <= 1 + max(colors[0..i-1]).
    std::vector<unsigned> colors(n, 0);
    for (;;) {
      unsigned blocks = 0;
      for (unsigned c : colors) blocks = std::max(blocks, c + 1);
      if (blocks <= k) {
        std::vector<std::vector<Code>> classes(blocks);
        for (Code v = 0; v < n; ++v) classes[colors[v]].push_back(v);
        if (std::all_of(classes.begin(), classes.end(),
                        [&](const auto& cls) { return class_is_acyclic(adj, cls); })) {
          return k;
        }
      }
      // Next restricted growth string with values below k.
      Code i = n;
      while (i-- > 1) {
        unsigned prefix_max = 0;
        for (Code j = 0; j < i; ++j) prefix_max = std::max(prefix_max, colors[j]);
        if (colors[i] <= prefix_max && colors[i] + 1 < k) {
          ++colors[i];
          std::fill(colors.begin() + i + 1, colors.end(), 0);
          break;
        }
      }
      if (i == 0) break;
    }
  }
  throw std::logic_error("brute_force_chi: no coloring found");
}

// ---------------------------------------------------------------------------
// Greedy

GreedyResult greedy_upper_bound(const Params& p, Code vertex_cap) {
  SolverBudget budget;
  budget.vertex_cap = vertex_cap;
  check_vertex_cap(p.vertex_count(), budget);
  const Code n = p.vertex_count();
  // Colors never exceed n, so size the counters for that.
  BlockModel model(p, static_cast<unsigned>(n), std::vector<unsigned>(p.d(), 1), false);
  std::vector<Color> colors(n);
  unsigned used = 0;
  for (Code v = 0; v < n; ++v) {
    Color c = 0;
    while (!model.assign(v, c)) {
      model.unassign(v, c);
      ++c;
    }
    colors[v] = c;
    used = std::max<unsigned>(used, c + 1);
  }
  return GreedyResult{used, Coloring(p, std::move(colors))};
}

}  // namespace dichro
