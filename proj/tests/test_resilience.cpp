#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "resil/errors.hpp"
#include "resil/resilience.hpp"
#include "resil/scan.hpp"

using namespace resil;

namespace {

std::int64_t as_int(const MaxResilience& m) { return std::get<std::int64_t>(m); }

}  // namespace

TEST(Scan, BinomialAndRank) {
  EXPECT_EQ(binomial(48, 5), 1712304u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(3, 4), 0u);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
  std::uint64_t rank = 0;
  oracle::for_each_subset(9, 4, [&](const std::vector<std::size_t>& idx) {
    std::vector<std::uint32_t> s(idx.begin(), idx.end());
    EXPECT_EQ(subset_rank(9, s), rank++);
    return true;
  });
  EXPECT_EQ(rank, binomial(9, 4));
}

TEST(GraphResilience, KnownValues) {
  EXPECT_TRUE(is_r_resiliently_k_colorable(classic::petersen(), 2, 3).resilient);
  const auto d = is_r_resiliently_k_colorable(classic::durer(), 2, 3);
  EXPECT_FALSE(d.resilient);
  ASSERT_TRUE(d.witness);
  EXPECT_EQ(d.witness->size(), 2u);
  EXPECT_FALSE(is_k_colorable(add_edges(classic::durer(), *d.witness), 3));
  EXPECT_FALSE(is_r_resiliently_k_colorable(classic::chvatal(), 4, 4).resilient);
  EXPECT_FALSE(is_r_resiliently_k_colorable(classic::complete_minus_matching(3), 2, 4).resilient);
}

TEST(GraphResilience, MaxValues) {
  EXPECT_EQ(as_int(max_graph_resilience(classic::grotzsch(), 4)), 4);
  EXPECT_EQ(as_int(max_graph_resilience(classic::durer(), 4)), 4);
  EXPECT_EQ(as_int(max_graph_resilience(classic::durer(), 3)), 1);
  EXPECT_EQ(as_int(max_graph_resilience(classic::chvatal(), 4)), 3);
  EXPECT_EQ(as_int(max_graph_resilience(classic::petersen(), 3)), 2);
  EXPECT_TRUE(std::holds_alternative<Saturated>(max_graph_resilience(complete_graph(3), 3)));
  for (int k = 3; k <= 4; ++k)
    EXPECT_EQ(as_int(max_graph_resilience(classic::complete_plus_isolated(static_cast<std::size_t>(k)), k)), k - 1);
  EXPECT_THROW(max_graph_resilience(complete_graph(4), 3), DomainError);
}

TEST(GraphResilience, SaturatedCap) {
  const auto v = is_r_resiliently_k_colorable(complete_graph(3), 1, 3);
  EXPECT_TRUE(v.resilient);
  EXPECT_TRUE(v.capped());
  EXPECT_EQ(v.r_tested, 0);
}

TEST(GraphResilience, UncolorableBaseGraph) {
  const auto v = is_r_resiliently_k_colorable(classic::petersen(), 0, 2);
  EXPECT_FALSE(v.resilient);
  ASSERT_TRUE(v.witness);
  EXPECT_TRUE(v.witness->empty());
}

TEST(GraphResilience, SubsetsCheckedIsWitnessRank) {
  const auto d = is_r_resiliently_k_colorable(classic::durer(), 2, 3);
  const auto ne = non_edges(classic::durer());
  std::uint64_t expected = 0;
  oracle::for_each_subset(ne.size(), 2, [&](const std::vector<std::size_t>& idx) {
    ++expected;
    return !(ne[idx[0]] == (*d.witness)[0] && ne[idx[1]] == (*d.witness)[1]);
  });
  EXPECT_EQ(d.subsets_checked, expected);
  EXPECT_EQ(is_r_resiliently_k_colorable(classic::petersen(), 2, 3).subsets_checked, binomial(30, 2));
}

TEST(GraphResilience, MatchesNaiveOracle) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const Graph g = oracle::random_graph(n, 0.15 + 0.5 * (rng() % 100) / 100.0, rng);
    const int k = 2 + static_cast<int>(rng() % 3);
    const std::size_t r = n <= 6 ? rng() % 4 : rng() % 3;
    const auto v = is_r_resiliently_k_colorable(g, static_cast<std::int64_t>(r), k,
                                                ScanOptions{1 + static_cast<int>(rng() % 3)});
    const auto o = oracle::graph_resilient(g, r, k);
    ASSERT_EQ(v.resilient, o.resilient) << serialize_graph(g) << "r=" << r << " k=" << k;
    EXPECT_EQ(v.witness, o.witness);
  }
}

TEST(GraphResilience, ThreadCountInvariant) {
  for (const Graph& g : {classic::durer(), classic::chvatal(), classic::grotzsch()}) {
    for (std::int64_t r = 3; r <= 5; ++r) {
      const auto a = is_r_resiliently_k_colorable(g, r, 4, ScanOptions{1});
      const auto b = is_r_resiliently_k_colorable(g, r, 4, ScanOptions{4});
      EXPECT_EQ(a.resilient, b.resilient);
      EXPECT_EQ(a.witness, b.witness);
      EXPECT_EQ(a.subsets_checked, b.subsets_checked);
    }
  }
}

// Monotonicity, shift, apex, 1-resilient (k+1) and degree laws on random
// colorable graphs.
TEST(GraphResilience, Laws) {
  std::mt19937_64 rng(22);
  int checked = 0;
  while (checked < 1000) {
    const std::size_t n = 2 + rng() % 6;
    const Graph g = oracle::random_graph(n, 0.2 + 0.5 * (rng() % 100) / 100.0, rng);
    const int k = 2 + static_cast<int>(rng() % 2);
    if (!is_k_colorable(g, k)) continue;
    ++checked;
    const MaxResilience m = max_graph_resilience(g, k);
    const std::int64_t total = static_cast<std::int64_t>(non_edges(g).size());
    const std::int64_t base = std::holds_alternative<Saturated>(m) ? total : as_int(m);

    for (std::int64_t r = 0; r <= std::min<std::int64_t>(base, 3); ++r)
      ASSERT_TRUE(is_r_resiliently_k_colorable(g, r, k).resilient);

    for (int s = 1; s <= 2; ++s) {
      const MaxResilience up = max_graph_resilience(g, k + s);
      if (const auto* v = std::get_if<std::int64_t>(&up)) EXPECT_GE(*v, base + s);
    }

    const std::int64_t r_apex = std::min<std::int64_t>(base, 3);
    EXPECT_TRUE(is_r_resiliently_k_colorable(apex_extension(g), r_apex, k + 1).resilient);

    EXPECT_TRUE(is_r_resiliently_k_colorable(g, 1, k + 1).resilient);

    const std::int64_t ck2 = k * (k - 1) / 2;
    if (base >= ck2 && !std::holds_alternative<Saturated>(m))
      EXPECT_LE(g.max_degree(), static_cast<std::size_t>(k - 1));
  }
}

// Plain scan with no coloring pool: every subset goes to the exact solver.
TEST(GraphResilience, ClassicsAgainstPlainScan) {
  struct Case {
    Graph g;
    int k;
    std::size_t r;
  };
  const Case cases[] = {{classic::petersen(), 3, 2}, {classic::durer(), 3, 1}, {classic::durer(), 4, 4},
                        {classic::grotzsch(), 4, 4}, {classic::chvatal(), 4, 3}};
  for (const Case& c : cases) {
    const ColoringSolver solver(c.g);
    const auto ne = non_edges(c.g);
    auto survives = [&](std::size_t r) {
      bool ok = true;
      oracle::for_each_subset(ne.size(), r, [&](const std::vector<std::size_t>& idx) {
        EdgeSet extra;
        for (auto i : idx) extra.push_back(ne[i]);
        ok = solver.solve(c.k, extra).has_value();
        return ok;
      });
      return ok;
    };
    EXPECT_TRUE(survives(c.r));
    EXPECT_FALSE(survives(c.r + 1));
  }
}
