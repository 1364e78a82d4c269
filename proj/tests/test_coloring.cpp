#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dichro/dichro.hpp"
#include "oracles.hpp"

using namespace dichro;

namespace {

Coloring random_coloring(const Params& p, unsigned k, std::mt19937_64& rng) {
  std::uniform_int_distribution<Color> pick(0, k - 1);
  std::vector<Color> colors(p.vertex_count());
  for (auto& c : colors) c = pick(rng);
  return Coloring(p, std::move(colors));
}

void expect_sound(const Coloring& c, const Refutation& r) {
  const Params& p = c.params();
  ASSERT_FALSE(cycle_defect(p, r.cycle)) << *cycle_defect(p, r.cycle);
  ASSERT_TRUE(r.cycle.color.has_value());
  EXPECT_EQ(r.cycle.length(), p.n());
  for (Code v : r.cycle.vertices) EXPECT_EQ(c[v], *r.cycle.color);
  EXPECT_FALSE(descent_defect(c, r.trace));
  EXPECT_FALSE(trace_law_violation(p, block_trace(p, r.cycle)));
  EXPECT_TRUE(std::holds_alternative<CycleWitness>(validate(c)));
}

}  // namespace

TEST(Canonicalize, Examples) {
  const Params p31 = make_params(3, 1);
  const Coloring a = canonicalize(Coloring(p31, {5, 9, 5}));
  EXPECT_EQ(std::vector<Color>(a.colors().begin(), a.colors().end()), (std::vector<Color>{0, 1, 0}));
  EXPECT_EQ(a.palette_size(), 2u);
  const Coloring id(p31, {0, 1, 2});
  EXPECT_TRUE(id.is_canonical());
  EXPECT_EQ(canonicalize(id), id);
  const Coloring constant = canonicalize(Coloring(make_params(4, 1), {7, 7, 7, 7}));
  EXPECT_EQ(constant, Coloring(make_params(4, 1), {0, 0, 0, 0}));
  EXPECT_EQ(constant.palette_size(), 1u);
  EXPECT_THROW(Coloring(p31, {0, 1}), InvalidArgument);
}

TEST(Canonicalize, Idempotent) {
  std::mt19937_64 rng(11);
  const Params p = make_params(3, 3);
  for (int i = 0; i < 100; ++i) {
    const Coloring c = random_coloring(p, 1 + i % 9, rng);
    const Coloring once = canonicalize(c);
    EXPECT_TRUE(once.is_canonical());
    EXPECT_EQ(canonicalize(once), once);
    EXPECT_EQ(once.palette_size(), c.palette_size());
  }
}

TEST(Validate, Examples) {
  const Params p31 = make_params(3, 1);
  const auto bad = validate(Coloring(p31, {0, 0, 0}));
  ASSERT_TRUE(std::holds_alternative<CycleWitness>(bad));
  EXPECT_EQ(std::get<CycleWitness>(bad).length(), 3u);
  EXPECT_EQ(std::get<CycleWitness>(bad).color, Color{0});
  EXPECT_TRUE(std::holds_alternative<Valid>(validate(Coloring(p31, {0, 1, 0}))));
  EXPECT_TRUE(std::holds_alternative<Valid>(validate(Coloring(make_params(2, 2), {0, 1, 2, 3}))));
}

// A class is acyclic iff no block holds it in all n children; check validate
// against that criterion and against the closure oracle.
TEST(Validate, AgreesWithOracles) {
  std::mt19937_64 rng(3);
  for (auto [n, d] : {std::pair{2u, 3u}, {3u, 2u}, {4u, 2u}, {3u, 3u}}) {
    const Params p = make_params(n, d);
    const auto adj = oracle::adjacency(n, d);
    for (int i = 0; i < 300; ++i) {
      const Coloring c = random_coloring(p, 2 + i % 4, rng);
      bool cyclic = false;
      for (Color col = 0; col < 6; ++col) {
        std::uint64_t mask = 0;
        for (Code v = 0; v < p.vertex_count(); ++v)
          if (c[v] == col) mask |= std::uint64_t{1} << v;
        cyclic = cyclic || oracle::has_cycle(adj, mask);
      }
      const auto r = validate(c);
      ASSERT_EQ(std::holds_alternative<CycleWitness>(r), cyclic);
      if (const auto* w = std::get_if<CycleWitness>(&r)) {
        ASSERT_FALSE(cycle_defect(p, *w));
        for (Code v : w->vertices) ASSERT_EQ(c[v], *w->color);
      }
    }
  }
}

TEST(Refute, Examples) {
  const Params p21 = make_params(2, 1);
  Refutation r = refute(Coloring(p21, {0, 0}));
  EXPECT_EQ(format_cycle(r.cycle), "0->1");
  EXPECT_EQ(r.cycle.color, Color{0});
  EXPECT_TRUE(r.trace.steps.empty());

  const Params p32 = make_params(3, 2);
  const Coloring zero(p32, std::vector<Color>(9, 0));
  r = refute(zero);
  EXPECT_EQ(format_cycle(r.cycle), "0->3->6");
  EXPECT_TRUE(r.trace.steps.empty());
  expect_sound(zero, r);

  // c(v) = v(0) mod 2: color 0 is missing from child 1, where color 1 fills
  // every grandchild.
  std::vector<Color> parity(9);
  for (Code v = 0; v < 9; ++v) parity[v] = p32.coord(v, 0) % 2;
  const Coloring pc(p32, parity);
  r = refute(pc);
  ASSERT_EQ(r.trace.steps.size(), 1u);
  EXPECT_EQ(r.trace.steps[0], (DescentStep{0, 1}));
  EXPECT_EQ(r.trace.final_prefix, BlockPrefix({1}));
  EXPECT_EQ(format_cycle(r.cycle), "3->4->5");
  EXPECT_EQ(r.cycle.color, Color{1});
  expect_sound(pc, r);

  try {
    refute(Coloring(make_params(3, 1), {0, 1, 2}));
    FAIL() << "expected PaletteTooLarge";
  } catch (const PaletteTooLarge& e) {
    EXPECT_NE(std::string(e.what()).find("palette exceeds depth"), std::string::npos);
  }
}

TEST(Refute, ReportsOriginalLabels) {
  const Params p32 = make_params(3, 2);
  std::vector<Color> parity(9);
  for (Code v = 0; v < 9; ++v) parity[v] = p32.coord(v, 0) % 2 ? 40 : 17;
  const Refutation r = refute(Coloring(p32, parity));
  EXPECT_EQ(r.trace.steps[0].eliminated, 17u);
  EXPECT_EQ(r.cycle.color, Color{40});
}

TEST(Refute, TotalOnRandomAndConstantColorings) {
  std::mt19937_64 rng(2024);
  for (unsigned n = 2; n <= 5; ++n) {
    for (unsigned d = 1; d <= 4 && oracle::power(n, d) <= 4096; ++d) {
      const Params p = make_params(n, d);
      for (Color k = 0; k < 3; ++k) {
        const Coloring c(p, std::vector<Color>(p.vertex_count(), k));
        expect_sound(c, refute(c));
      }
      for (int i = 0; i < 100; ++i) {
        const Coloring c = random_coloring(p, 1 + i % d, rng);
        expect_sound(c, refute(c));
      }
    }
  }
}

// Colorings built to force the descent all the way down: color i marks the
// vertices whose first i coordinates are n-1, so it is missing from the last
// child at depth i.
TEST(Refute, DeepDescent) {
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned d = 1; d <= 4; ++d) {
      const Params p = make_params(n, d);
      std::vector<Color> colors(p.vertex_count());
      for (Code v = 0; v < p.vertex_count(); ++v) {
        unsigned depth = 0;
        while (depth + 1 < d && p.coord(v, depth) == n - 1) ++depth;
        colors[v] = depth;
      }
      const Coloring c(p, colors);
      ASSERT_TRUE(c.is_canonical());
      const Refutation r = refute(c);
      expect_sound(c, r);
      ASSERT_EQ(r.trace.steps.size(), d - 1) << n << ' ' << d;
      for (unsigned i = 0; i + 1 < d; ++i) EXPECT_EQ(r.trace.steps[i], (DescentStep{i, n - 1}));
    }
  }
}

TEST(Refute, InvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  const Params p = make_params(3, 3);
  for (int i = 0; i < 200; ++i) {
    const Coloring c = random_coloring(p, 3, rng);
    std::vector<Color> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Color> relabeled(c.colors().begin(), c.colors().end());
    for (auto& x : relabeled) x = perm[x] + 10;
    const Coloring d(p, relabeled);
    const Refutation a = refute(c), b = refute(d);
    expect_sound(d, b);
    EXPECT_EQ(a.cycle.vertices, b.cycle.vertices);
    EXPECT_EQ(validate(c).index(), validate(d).index());
    EXPECT_EQ(canonicalize(c), canonicalize(d));
  }
}

TEST(Descent, DetectsForgedTrace) {
  const Params p32 = make_params(3, 2);
  std::vector<Color> parity(9);
  for (Code v = 0; v < 9; ++v) parity[v] = p32.coord(v, 0) % 2;
  const Coloring c(p32, parity);
  DescentTrace forged{{{0, 0}}, BlockPrefix({0})};
  EXPECT_TRUE(descent_defect(c, forged));
  DescentTrace wrong_prefix{{{0, 1}}, BlockPrefix({2})};
  EXPECT_TRUE(descent_defect(c, wrong_prefix));
}
