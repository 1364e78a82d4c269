#ifndef DICHRO_COLORING_HPP
#define DICHRO_COLORING_HPP

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "dichro/analysis.hpp"
#include "dichro/construction.hpp"

namespace dichro {

// A total vertex coloring of D(n, d): colors()[i] is the color of code i.
class Coloring {
 public:
  // Throws InvalidArgument unless colors.size() == n^d.
  Coloring(const Params& p, std::vector<Color> colors);

  const Params& params() const { return params_; }
  std::span<const Color> colors() const { return colors_; }
  Color operator[](Code v) const { return colors_[v]; }
  // Number of distinct colors.
  std::size_t palette_size() const { return palette_size_; }

  // Colors are 0..palette_size-1 numbered by first occurrence in code order.
  bool is_canonical() const;

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.params_ == b.params_ && a.colors_ == b.colors_;
  }

 private:
  Params params_;
  std::vector<Color> colors_;
  std::size_t palette_size_ = 0;
};

// Renames colors by first occurrence in code order. Idempotent.
Coloring canonicalize(const Coloring& c);

struct Valid {
  friend bool operator==(Valid, Valid) = default;
};
using ValidationResult = std::variant<Valid, CycleWitness>;

// Valid iff every color class induces an acyclic subdigraph; otherwise a
// monochromatic cycle with its color set. Classes are checked in ascending
// color order.
ValidationResult validate(const Coloring& c);

struct DescentStep {
  Color eliminated;
  unsigned child;

  friend bool operator==(DescentStep, DescentStep) = default;
};

struct DescentTrace {
  std::vector<DescentStep> steps;
  BlockPrefix final_prefix;
};

struct Refutation {
  CycleWitness cycle;
  DescentTrace trace;
};

// Finds a monochromatic directed n-cycle in any coloring that uses at most d
// colors.
//
// Walks down the block tree keeping a prefix s whose block avoids every color
// eliminated so far. At step b, with color b taken in canonical order: if b
// occurs in all n child blocks V_{s k}, the smallest-code vertex of color b in
// each child closes a cycle (consecutive picks first differ at coordinate |s|
// by +1 mod n). Otherwise s is extended by the smallest child avoiding b. With
// at most d colors the walk must close a cycle before it runs out of depth.
//
// Colors in the result (witness and trace) are the caller's labels; only the
// elimination order uses canonical ids. Throws PaletteTooLarge if
// palette_size() > d.
Refutation refute(const Coloring& c);

// Empty when replaying the trace against c confirms that every eliminated
// color is absent from the child block entered at that step.
std::optional<std::string> descent_defect(const Coloring& c, const DescentTrace& t);

}  // namespace dichro

#endif  // DICHRO_COLORING_HPP
