#ifndef DICHRO_SOLVER_HPP
#define DICHRO_SOLVER_HPP

// Exact dichromatic number.
//
// The search assigns colors to vertices in code order with the usual
// symmetry breaking (vertex 0 takes color 0; a vertex may open at most one
// color beyond those already used). After each assignment the color class is
// checked for a new directed cycle.
//
// On D(n, d) that check is O(d): a color class contains a directed cycle iff
// some block V_s has the color in all n of its child blocks. A cycle with
// longest common prefix s passes through every child of V_s, and conversely
// all edges V_{s k} -> V_{s k+1} are present. The solver keeps, for every
// block, how many of its children contain each color.
//
// The same counters drive a lookahead. If q is the proven dichromatic number
// of D(n, h) for the child depth h, every child block needs at least q of the
// r colors still allowed in its parent, so it leaves out at most r - q of
// them, while every color common to the finished children must be left out
// by some unfinished child. Values of q come from earlier exhaustive runs at
// smaller depth, so a pruned branch is still a proof.

#include <cstdint>
#include <optional>
#include <vector>

#include "dichro/coloring.hpp"
#include "dichro/construction.hpp"
#include "dichro/digraph.hpp"

namespace dichro {

struct SolverBudget {
  Code vertex_cap = 4096;
  // Search nodes (color assignments tried) per decision; 0 means unlimited.
  std::uint64_t node_limit = 0;
  unsigned workers = 1;
  // Disable the block lookahead and rely on conflict checks alone.
  bool lookahead = true;
};

struct SolverStats {
  std::uint64_t nodes = 0;
};

struct ChiResult {
  unsigned chi = 0;
  Coloring witness;
  // False when the witness came from a multi-worker search and may vary
  // between runs. chi itself never does.
  bool witness_deterministic = true;
  SolverStats stats;
};

// Exact chi of D(n, d), trying k = d+1, d+2, ... (k = 2^d when n = 2).
// Throws CapExceeded when n^d > vertex_cap or a decision runs past
// node_limit.
ChiResult dichromatic_number(const Params& p, const SolverBudget& budget = {});

// A coloring of D(n, d) with at most k colors and every class acyclic, or
// empty after exhausting the search. Throws CapExceeded as above.
std::optional<Coloring> find_acyclic_coloring(const Params& p, unsigned k,
                                              const SolverBudget& budget = {},
                                              SolverStats* stats = nullptr);

// Exact chi of D(n, h) for h = 0..d (index 0 holds 1, a single vertex),
// computed bottom-up; each level prunes with the levels below it.
std::vector<unsigned> solve_depths(unsigned n, unsigned d, const SolverBudget& budget = {});

// Generic digraph solver used for imported edge lists. Each assignment is
// checked by a reachability search inside its color class.
struct GraphChiResult {
  unsigned chi = 0;
  std::vector<Color> witness;
  SolverStats stats;
};
GraphChiResult dichromatic_number(const ExplicitDigraph& g, const SolverBudget& budget = {});
std::optional<std::vector<Color>> find_acyclic_coloring(const ExplicitDigraph& g, unsigned k,
                                                        const SolverBudget& budget = {},
                                                        SolverStats* stats = nullptr);

// Exhaustive reference: every canonical coloring with k = 1, 2, ... colors,
// each class tested for cycles directly from has_edge. Requires n^d <= 12.
unsigned brute_force_chi(const Params& p);
inline constexpr Code kBruteForceVertexCap = 12;

// First-fit in code order: each vertex takes the smallest color whose class
// stays acyclic.
struct GreedyResult {
  unsigned k = 0;
  Coloring witness;
};
GreedyResult greedy_upper_bound(const Params& p, Code vertex_cap = 4096);

}  // namespace dichro

#endif  // DICHRO_SOLVER_HPP
