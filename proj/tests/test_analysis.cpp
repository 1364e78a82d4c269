#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "dichro/dichro.hpp"
#include "oracles.hpp"

using namespace dichro;

namespace {

void expect_trace_law(const Params& p, const CycleWitness& w) {
  ASSERT_FALSE(cycle_defect(p, w)) << *cycle_defect(p, w);
  const BlockTrace t = block_trace(p, w);
  const auto violation = trace_law_violation(p, t);
  EXPECT_FALSE(violation) << *violation << " on " << format_cycle(w);
  EXPECT_GE(w.length(), p.n());
}

std::vector<Code> all_codes(const Params& p) {
  std::vector<Code> out(p.vertex_count());
  std::iota(out.begin(), out.end(), Code{0});
  return out;
}

}  // namespace

TEST(Girth, Examples) {
  const GirthResult ring = directed_girth(make_params(4, 1));
  EXPECT_EQ(ring.length, 4u);
  EXPECT_EQ(format_cycle(ring.witness), "0->1->2->3");

  const GirthResult pair = directed_girth(make_params(2, 3));
  EXPECT_EQ(pair.length, 2u);
  expect_trace_law(make_params(2, 3), pair.witness);

  const Params p32 = make_params(3, 2);
  const GirthResult tri = directed_girth(p32);
  EXPECT_EQ(tri.length, 3u);
  EXPECT_EQ(format_cycle(tri.witness), "0->1->2");
  expect_trace_law(p32, tri.witness);
  // The constant sequences also form a triangle.
  check_cycle(p32, CycleWitness{{0, 4, 8}, std::nullopt});
}

TEST(Girth, EqualsNWithAndWithoutBound) {
  for (unsigned n = 2; n <= 6; ++n) {
    for (unsigned d = 1; oracle::power(n, d) <= 256; ++d) {
      const Params p = make_params(n, d);
      GirthOptions full;
      full.use_lower_bound = false;
      const GirthResult fast = directed_girth(p);
      const GirthResult slow = directed_girth(p, full);
      EXPECT_EQ(fast.length, n);
      EXPECT_EQ(slow.length, n);
      EXPECT_EQ(fast.witness, slow.witness);
      expect_trace_law(p, fast.witness);
    }
  }
}

TEST(Girth, ParallelMatchesSerial) {
  for (unsigned n : {2u, 3u, 5u}) {
    const Params p = make_params(n, 3);
    GirthOptions par;
    par.workers = 4;
    par.use_lower_bound = false;
    EXPECT_EQ(directed_girth(p, par).witness, directed_girth(p).witness);
  }
}

TEST(Girth, ExplicitGraphs) {
  const std::vector<Edge> path{{0, 1}, {1, 2}};
  EXPECT_FALSE(directed_girth(ExplicitDigraph(3, path)));
  const std::vector<Edge> two_cycles{{0, 1}, {1, 2}, {2, 3}, {3, 1}, {2, 0}};
  const auto g = directed_girth(ExplicitDigraph(4, two_cycles));
  ASSERT_TRUE(g);
  EXPECT_EQ(g->length, 3u);
  EXPECT_EQ(format_cycle(g->witness), "0->1->2");
  const Params p = make_params(3, 2);
  const auto m = directed_girth(ExplicitDigraph(9, materialize(p, kDefaultEdgeCap)), 3);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->witness, directed_girth(p).witness);
}

TEST(CycleCheck, Defects) {
  const Params p = make_params(3, 1);
  EXPECT_FALSE(cycle_defect(p, {{0, 1, 2}, {}}));
  EXPECT_TRUE(cycle_defect(p, {{0, 2, 1}, {}}));   // wrong direction
  EXPECT_TRUE(cycle_defect(p, {{0}, {}}));         // too short
  EXPECT_TRUE(cycle_defect(p, {{0, 1, 2, 0}, {}}));  // repeated vertex
  EXPECT_TRUE(cycle_defect(p, {{0, 1, 7}, {}}));   // out of range
  EXPECT_THROW(check_cycle(p, {{1, 0}, {}}), CorruptWitness);
  EXPECT_THROW(block_trace(p, {{1, 0}, {}}), CorruptWitness);
}

TEST(Acyclicity, Examples) {
  const Params p31 = make_params(3, 1);
  const auto tri = is_acyclic_subset(p31, all_codes(p31));
  ASSERT_TRUE(std::holds_alternative<CycleWitness>(tri));
  EXPECT_EQ(std::get<CycleWitness>(tri).length(), 3u);

  const std::vector<Code> single{4};
  EXPECT_TRUE(std::holds_alternative<Acyclic>(is_acyclic_subset(make_params(3, 2), single)));

  const Params p32 = make_params(3, 2);
  const std::vector<Code> block{0, 1, 2};
  const auto inner = is_acyclic_subset(p32, block);
  ASSERT_TRUE(std::holds_alternative<CycleWitness>(inner));
  const auto& w = std::get<CycleWitness>(inner);
  EXPECT_EQ(w.length(), 3u);
  expect_trace_law(p32, w);
  EXPECT_EQ(to_string(block_trace(p32, w).lcp), "<0>");

  const std::vector<Code> outside{3, 27};
  EXPECT_THROW(is_acyclic_subset(make_params(3, 3), outside), InvalidArgument);
  EXPECT_TRUE(std::holds_alternative<Acyclic>(is_acyclic_subset(p32, std::vector<Code>{})));
}

// Every subset of every instance with at most 9 vertices.
TEST(Acyclicity, PowerSetAgainstClosure) {
  for (unsigned n = 2; n <= 9; ++n) {
    for (unsigned d = 1; oracle::power(n, d) <= 9; ++d) {
      const Params p = make_params(n, d);
      const auto adj = oracle::adjacency(n, d);
      const std::uint64_t V = p.vertex_count();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << V); ++mask) {
        std::vector<Code> subset;
        for (Code v = 0; v < V; ++v)
          if (mask >> v & 1) subset.push_back(v);
        const auto r = is_acyclic_subset(p, subset);
        ASSERT_EQ(std::holds_alternative<CycleWitness>(r), oracle::has_cycle(adj, mask))
            << n << ' ' << d << " mask " << mask;
        if (const auto* w = std::get_if<CycleWitness>(&r)) {
          for (Code v : w->vertices) ASSERT_TRUE(mask >> v & 1);
          expect_trace_law(p, *w);
        }
      }
    }
  }
}

TEST(Acyclicity, RandomSubsetsLargerInstances) {
  std::mt19937_64 rng(7);
  for (auto [n, d] : {std::pair{3u, 4u}, {4u, 3u}, {5u, 3u}, {2u, 6u}}) {
    const Params p = make_params(n, d);
    const ExplicitDigraph g(p.vertex_count(), materialize(p, kDefaultEdgeCap));
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Code> subset;
      std::bernoulli_distribution keep(0.05 + 0.002 * trial);
      for (Code v = 0; v < p.vertex_count(); ++v)
        if (keep(rng)) subset.push_back(v);
      const auto implicit = is_acyclic_subset(p, subset);
      const auto explicit_ = is_acyclic_subset(g, subset);
      ASSERT_EQ(implicit.index(), explicit_.index());
      if (const auto* w = std::get_if<CycleWitness>(&implicit)) expect_trace_law(p, *w);
    }
  }
}

TEST(BlockTrace, Examples) {
  const Params p42 = make_params(4, 2);
  const BlockTrace consts = block_trace(p42, {{0, 5, 10, 15}, {}});
  EXPECT_EQ(consts.lcp, BlockPrefix{});
  EXPECT_EQ(consts.trace, (std::vector<unsigned>{0, 1, 2, 3}));

  const Params p32 = make_params(3, 2);
  const BlockTrace inner = block_trace(p32, {{6, 7, 8}, {}});
  EXPECT_EQ(inner.lcp, BlockPrefix({2}));
  EXPECT_EQ(inner.trace, (std::vector<unsigned>{0, 1, 2}));

  // A longer cycle lingers inside a child block before stepping on.
  const CycleWitness lingering{{0, 1, 3, 4, 6, 7}, {}};
  check_cycle(p32, lingering);
  const BlockTrace t = block_trace(p32, lingering);
  EXPECT_EQ(t.trace, (std::vector<unsigned>{0, 0, 1, 1, 2, 2}));
  EXPECT_FALSE(trace_law_violation(p32, t));

  EXPECT_TRUE(trace_law_violation(p32, BlockTrace{{}, {0, 1}}));      // misses 2
  EXPECT_TRUE(trace_law_violation(p32, BlockTrace{{}, {0, 2, 1}}));   // backwards
}

TEST(Girth, ExactlyNUpTo4096Vertices) {
  for (unsigned n = 2; n <= 4096; ++n) {
    for (unsigned d = 1; oracle::power(n, d) <= 4096; ++d) {
      const Params p = make_params(n, d);
      const GirthResult g = directed_girth(p);
      ASSERT_EQ(g.length, n) << n << ' ' << d;
      ASSERT_FALSE(cycle_defect(p, g.witness));
    }
  }
}
