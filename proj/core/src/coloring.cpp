#include "dichro/coloring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "dichro/errors.hpp"

namespace dichro {

Coloring::Coloring(const Params& p, std::vector<Color> colors)
    : params_(p), colors_(std::move(colors)) {
  if (colors_.size() != p.vertex_count()) {
    throw InvalidArgument("coloring has " + std::to_string(colors_.size()) +
                          " entries, expected " + std::to_string(p.vertex_count()));
  }
  std::vector<Color> sorted = colors_;
  std::sort(sorted.begin(), sorted.end());
  palette_size_ = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

bool Coloring::is_canonical() const {
  Color next = 0;
  for (Color c : colors_) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return true;
}

namespace {

// Canonical id of every vertex.
std::vector<Color> canonical_ids(std::span<const Color> colors) {
  std::unordered_map<Color, Color> rename;
  std::vector<Color> out;
  out.reserve(colors.size());
  for (Color c : colors) {
    auto [it, fresh] = rename.try_emplace(c, static_cast<Color>(rename.size()));
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

Coloring canonicalize(const Coloring& c) {
  return Coloring(c.params(), canonical_ids(c.colors()));
}

ValidationResult validate(const Coloring& c) {
  std::map<Color, std::vector<Code>> classes;
  for (Code v = 0; v < c.params().vertex_count(); ++v) classes[c[v]].push_back(v);
  for (const auto& [color, members] : classes) {
    AcyclicityResult r = is_acyclic_subset(c.params(), members);
    if (auto* cycle = std::get_if<CycleWitness>(&r)) {
      cycle->color = color;
      return *cycle;
    }
  }
  return Valid{};
}

Refutation refute(const Coloring& c) {
  const Params& p = c.params();
  if (c.palette_size() > p.d()) {
    throw PaletteTooLarge("palette exceeds depth: coloring uses " +
                          std::to_string(c.palette_size()) + " colors but d=" +
                          std::to_string(p.d()));
  }
  const std::vector<Color> ids = canonical_ids(c.colors());
  std::vector<Color> label(c.palette_size());
  for (Code v = ids.size(); v-- > 0;) label[ids[v]] = c[v];

  Refutation out;
  std::vector<unsigned> prefix;
  for (Color step = 0; step < c.palette_size(); ++step) {
    // Block V_s is [base, base + n * child_size).
    const Interval block = block_interval(p, BlockPrefix(prefix));
    const Code child_size = block.size() / p.n();

    std::vector<Code> picks;
    std::optional<unsigned> avoiding;
    for (unsigned k = 0; k < p.n(); ++k) {
      const Code begin = block.begin + k * child_size;
      const auto first = std::find(ids.begin() + begin, ids.begin() + begin + child_size, step);
      if (first == ids.begin() + begin + child_size) {
        avoiding = k;
        break;
      }
      picks.push_back(static_cast<Code>(first - ids.begin()));
    }

    if (!avoiding) {
      out.cycle.vertices = std::move(picks);
      out.cycle.color = label[step];
      out.trace.final_prefix = BlockPrefix(std::move(prefix));
      return out;
    }
    out.trace.steps.push_back(DescentStep{label[step], *avoiding});
    prefix.push_back(*avoiding);
  }
  // V_s is nonempty, yet every color in the palette was shown absent from it.
  throw std::logic_error("refute: descent exhausted the palette on a total coloring");
}

std::optional<std::string> descent_defect(const Coloring& c, const DescentTrace& t) {
  const Params& p = c.params();
  std::vector<unsigned> prefix;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const DescentStep& step = t.steps[i];
    if (prefix.size() >= p.d() || step.child >= p.n()) {
      return "step " + std::to_string(i) + " leaves the block tree";
    }
    prefix.push_back(step.child);
    const Interval block = block_interval(p, BlockPrefix(prefix));
    for (Code v = block.begin; v < block.end; ++v) {
      if (c[v] == step.eliminated) {
        return "step " + std::to_string(i) + ": color " + std::to_string(step.eliminated) +
               " occurs in " + to_string(BlockPrefix(prefix)) + " at vertex " + std::to_string(v);
      }
    }
  }
  if (BlockPrefix(prefix) != t.final_prefix) return "final prefix does not match the steps";
  return std::nullopt;
}

}  // namespace dichro
