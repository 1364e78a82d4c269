#ifndef DICHRO_ANALYSIS_HPP
#define DICHRO_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dichro/construction.hpp"
#include "dichro/digraph.hpp"

namespace dichro {

using Color = std::uint32_t;

// An ordered directed cycle v_0 -> v_1 -> ... -> v_{L-1} -> v_0. When `color`
// is set the cycle is claimed monochromatic in that color.
struct CycleWitness {
  std::vector<Code> vertices;
  std::optional<Color> color;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

// "0->1->2"
std::string format_cycle(const CycleWitness& w);

// Empty when w is a valid directed cycle of D(n, d) (L >= 2, distinct
// in-range vertices, every edge present); otherwise the first defect found.
std::optional<std::string> cycle_defect(const Params& p, const CycleWitness& w);
std::optional<std::string> cycle_defect(const ExplicitDigraph& g, const CycleWitness& w);

// Throws CorruptWitness with the defect.
void check_cycle(const Params& p, const CycleWitness& w);
void check_cycle(const ExplicitDigraph& g, const CycleWitness& w);

struct GirthOptions {
  // Stop as soon as a cycle of length n is found. n is a proven lower bound
  // for D(n, d), so this does not change the answer.
  bool use_lower_bound = true;
  unsigned workers = 1;
};

struct GirthResult {
  std::uint64_t length = 0;
  CycleWitness witness;
};

// Shortest directed cycle by breadth-first search from each start in
// ascending code order. The witness is the one found from the smallest start
// achieving the minimum, with successors scanned in ascending code order; it
// does not depend on `workers`.
GirthResult directed_girth(const Params& p, const GirthOptions& opts = {});

// Same search without any lower bound. Empty if the digraph is acyclic.
std::optional<GirthResult> directed_girth(const ExplicitDigraph& g, unsigned workers = 1);

struct Acyclic {
  friend bool operator==(Acyclic, Acyclic) = default;
};
using AcyclicityResult = std::variant<Acyclic, CycleWitness>;

// Whether the subdigraph induced on `subset` has a directed cycle, by an
// iterative three-state depth-first search. Roots are taken in ascending
// code order and successors scanned ascending, so the witness is
// deterministic. Duplicates in `subset` are ignored; out-of-range codes throw
// InvalidArgument.
AcyclicityResult is_acyclic_subset(const Params& p, std::span<const Code> subset);
AcyclicityResult is_acyclic_subset(const ExplicitDigraph& g, std::span<const Code> subset);

struct BlockTrace {
  // Longest common prefix of the cycle's vertices.
  BlockPrefix lcp;
  // Coordinate lcp.length() of each cycle vertex, in cycle order.
  std::vector<unsigned> trace;
};

// Throws CorruptWitness if w is not a valid cycle of D(n, d).
BlockTrace block_trace(const Params& p, const CycleWitness& w);

// A directed cycle with common prefix s must pass through every child block
// V_{s k}, stepping k -> k+1 (mod n) whenever it changes child. Returns the
// first violation of either property, if any.
std::optional<std::string> trace_law_violation(const Params& p, const BlockTrace& t);

}  // namespace dichro

#endif  // DICHRO_ANALYSIS_HPP
