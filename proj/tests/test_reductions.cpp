#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "resil/errors.hpp"
#include "resil/gadgets.hpp"
#include "resil/reductions.hpp"
#include "resil/resilience.hpp"

using namespace resil;

TEST(BlowUp, Examples) {
  const CnfFormula one = blow_up(CnfFormula(3, {{1, 2, 3}}), 2);
  EXPECT_EQ(one.num_vars(), 6);
  EXPECT_EQ(one.clauses(), (std::vector<Clause>{{1, 2, 3, 4, 5, 6}}));
  const CnfFormula two = blow_up(CnfFormula(3, {{1, 2, 3}, {-1, -2, 3}}), 2);
  EXPECT_EQ(two.num_clauses(), 4u);
  EXPECT_EQ(two.width(), 6u);
  EXPECT_EQ(two.clauses()[1], (Clause{1, 2, 3, -4, -5, 6}));
  EXPECT_EQ(blow_up(CnfFormula(2, {{1, -2}}), 1), CnfFormula(2, {{1, -2}}));
}

TEST(BlowUp, Budget) {
  Budget tight;
  tight.max_clauses = 15;
  const CnfFormula f(2, {{1}, {2}, {-1, 2}, {1, 2}});
  EXPECT_NO_THROW(blow_up(f, 1, tight));
  try {
    blow_up(f, 2, tight);
    FAIL();
  } catch (const BudgetError& e) {
    EXPECT_NE(std::string(e.what()).find("4^2"), std::string::npos);
  }
  EXPECT_THROW(blow_up(f, 0), PreconditionError);
}

TEST(BlowUp, EquisatisfiableAndResilient) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const CnfFormula f = oracle::random_cnf(n, 1 + static_cast<int>(rng() % 4), 1, 3, false, rng);
    const bool sat = oracle::satisfiable(f);
    for (int s = 2; s <= 3; ++s) {
      if (n * s > 12) continue;
      const CnfFormula b = blow_up(f, s);
      ASSERT_EQ(oracle::satisfiable(b), sat);
      if (sat) EXPECT_TRUE(is_r_resilient(b, s - 1).resilient);
    }
  }
}

TEST(ShrinkDown, Examples) {
  // (a b c d e f) with a..f = 1..6.
  const CnfFormula s6 = shrink_down(CnfFormula(6, {{1, 2, 3, 4, 5, 6}}));
  EXPECT_EQ(s6.clauses(), (std::vector<Clause>{{1, 2, 3, 7}, {4, 5, 6, -7}}));
  const CnfFormula s5 = shrink_down(CnfFormula(5, {{1, 2, 3, 4, 5}}));
  EXPECT_EQ(s5.clauses(), (std::vector<Clause>{{1, 2, 3, 6}, {4, 5, -6}}));
  EXPECT_EQ(s5.width(), 4u);
  EXPECT_THROW(shrink_down(CnfFormula(1, {{1}})), PreconditionError);
}

TEST(ShrinkDown, Width5EquisatisfiableExhaustive) {
  // Every sign pattern of one width-5 clause, checked over all 2^6 assignments.
  for (int signs = 0; signs < 32; ++signs) {
    Clause c;
    for (int i = 0; i < 5; ++i) c.push_back(((signs >> i) & 1) ? -(i + 1) : i + 1);
    const CnfFormula f(5, {c});
    const CnfFormula g = shrink_down(f);
    for (std::uint32_t bits = 0; bits < 32; ++bits) {
      const bool fv = oracle::satisfiable(f, 31u, bits);
      const bool gv = oracle::satisfiable(g, 31u, bits);
      EXPECT_EQ(fv, gv);
    }
  }
}

TEST(ShrinkDown, EquisatisfiableRandom) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 150; ++t) {
    const int n = 6 + static_cast<int>(rng() % 3);
    const CnfFormula f = oracle::random_cnf(n, 1 + static_cast<int>(rng() % 3), 6, 6, true, rng);
    const CnfFormula g = shrink_down(f);
    EXPECT_EQ(g.width(), 4u);
    EXPECT_EQ(oracle::satisfiable(f), oracle::satisfiable(g));
  }
}

TEST(PadToWidth, Inert) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const CnfFormula f = oracle::random_cnf(n, 1 + static_cast<int>(rng() % 4), 1, 3, true, rng);
    const CnfFormula p = pad_to_width(f, 4);
    for (const Clause& c : p.clauses()) EXPECT_EQ(c.size(), 4u);
    // Same models on the original variables.
    const std::uint32_t mask = (1u << n) - 1;
    for (std::uint32_t bits = 0; bits <= mask; ++bits)
      EXPECT_EQ(oracle::satisfiable(f, mask, bits), oracle::satisfiable(p, mask, bits));
  }
}

TEST(HardnessChain, StartWidths) {
  EXPECT_EQ(chain_start_width(2), 9u);
  EXPECT_EQ(chain_start_width(3), 16u);
  EXPECT_EQ(chain_start_width(4), 24u);
  EXPECT_EQ(chain_start_width(5), 18u);
  EXPECT_EQ(chain_start_width(7), 26u);
}

TEST(HardnessChain, Examples) {
  const CnfFormula f5 = hardness_chain(5, CnfFormula(3, {{1, 2, 3}}));
  EXPECT_EQ(f5.width(), 6u);
  for (const Clause& c : f5.clauses()) EXPECT_EQ(c.size(), 6u);
  EXPECT_TRUE(is_r_resilient(f5, 5).resilient);

  const CnfFormula unsat = hardness_chain(2, CnfFormula(1, {{1}, {-1}}));
  EXPECT_EQ(unsat.width(), 3u);
  EXPECT_FALSE(is_satisfiable(unsat));

  const CnfFormula f2 = hardness_chain(2, CnfFormula(3, {{1, -2}}));
  EXPECT_EQ(f2.width(), 3u);
  EXPECT_TRUE(is_r_resilient(f2, 2).resilient);

  EXPECT_THROW(hardness_chain(1, CnfFormula(1, {{1}})), PreconditionError);
}

TEST(HardnessChain, Widths) {
  for (int r = 2; r <= 6; ++r) {
    const CnfFormula out = hardness_chain(r, CnfFormula(2, {{1, 2}}));
    EXPECT_EQ(out.width(), static_cast<std::size_t>(r + 1)) << "r=" << r;
  }
}

TEST(HardnessChain, Equisatisfiable) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const CnfFormula f = oracle::random_cnf(n, 1 + static_cast<int>(rng() % 3), 1, 3, false, rng);
    const CnfFormula c = hardness_chain(2, f);
    EXPECT_EQ(is_satisfiable(c).has_value(), oracle::satisfiable(f));
  }
}

TEST(SixCnfToGraph, Layout) {
  const CnfFormula f(6, {{1, 2, 3, 4, 5, 6}});
  const GadgetGraph gg = six_cnf_to_graph(f);
  const std::size_t vars = 6;
  const std::size_t expected = 1 + 4 * vars + static_cast<std::size_t>(negation_gadget().internal) * vars +
                               static_cast<std::size_t>(clause_gadget().internal);
  EXPECT_EQ(gg.graph.num_vertices(), expected);
  for (const auto& [lit, ports] : gg.literal_ports) {
    EXPECT_TRUE(gg.graph.has_edge(gg.base, ports.first));
    EXPECT_TRUE(gg.graph.has_edge(gg.base, ports.second));
  }
  EXPECT_EQ(gg.literal_ports.size(), 12u);
  // Own vertex ranges are disjoint.
  std::vector<int> owner(gg.graph.num_vertices(), 0);
  for (const auto& rec : gg.provenance)
    for (Vertex v = rec.first; v < rec.first + rec.count; ++v) ++owner[v];
  for (int c : owner) EXPECT_EQ(c, 1);
}

TEST(SixCnfToGraph, PositiveOnlyVariableGetsBothPolarities) {
  const GadgetGraph gg = six_cnf_to_graph(CnfFormula(2, {{2}}));
  EXPECT_TRUE(gg.literal_ports.count(2));
  EXPECT_TRUE(gg.literal_ports.count(-2));
  EXPECT_FALSE(gg.literal_ports.count(1));
}

TEST(SixCnfToGraph, Examples) {
  EXPECT_TRUE(is_k_colorable(six_cnf_to_graph(CnfFormula(3, {{1, -2, 3}})).graph, 3));
  const CnfFormula unsat(1, {{1, 1, 1, 1, 1, 1}, {-1, -1, -1, -1, -1, -1}});
  EXPECT_FALSE(is_k_colorable(six_cnf_to_graph(unsat).graph, 3));
  EXPECT_THROW(six_cnf_to_graph(CnfFormula(7, {{1, 2, 3, 4, 5, 6, 7}})), PreconditionError);
  Budget tiny;
  tiny.max_vertices = 10;
  EXPECT_THROW(six_cnf_to_graph(CnfFormula(3, {{1, 2, 3}}), tiny), BudgetError);
}

TEST(ThreeSatToColoring, Examples) {
  const GadgetGraph pos = three_sat_to_coloring(CnfFormula(3, {{1, 2, 3}}));
  EXPECT_TRUE(is_r_resiliently_k_colorable(pos.graph, 1, 3).resilient);
  const GadgetGraph neg = three_sat_to_coloring(CnfFormula(1, {{1}, {-1}}));
  EXPECT_GE(chromatic_number(neg.graph), 4);
  const GadgetGraph empty = three_sat_to_coloring(CnfFormula(3, {}));
  EXPECT_EQ(empty.graph.num_vertices(), 1u);
  EXPECT_TRUE(is_k_colorable(empty.graph, 3));
}

TEST(SixCnfToGraph, OneResilientTwoClauseBlowUp) {
  const CnfFormula f = blow_up(CnfFormula(3, {{1, 2, 3}, {-1, -2, 3}}), 2);
  ASSERT_TRUE(is_r_resilient(f, 1).resilient);
  const GadgetGraph gg = six_cnf_to_graph(f);
  const auto v = is_r_resiliently_k_colorable(gg.graph, 1, 3);
  EXPECT_TRUE(v.resilient);
  EXPECT_EQ(v.subsets_checked, non_edges(gg.graph).size());
}

TEST(Decode, PortColors) {
  const GadgetGraph gg = six_cnf_to_graph(CnfFormula(1, {{1}}));
  auto c = is_k_colorable(gg.graph, 3);
  ASSERT_TRUE(c);
  const Coloring norm = normalize_to_gray_base(gg, *c);
  EXPECT_EQ(norm.colors[gg.base], kGray);
  const auto [p, q] = gg.literal_ports.at(1);
  EXPECT_NE(norm.colors[p], kGray);
  EXPECT_NE(norm.colors[q], kGray);
  EXPECT_EQ(norm.colors[p], norm.colors[q]);
  EXPECT_TRUE(decode_coloring(gg, *c)[1]);
  Coloring bad = *c;
  bad.colors[p] = bad.colors[gg.base];
  EXPECT_THROW(decode_coloring(gg, bad), PreconditionError);
}

TEST(Decode, RandomPipeline) {
  std::mt19937_64 rng(35);
  int sat_count = 0;
  while (sat_count < 100) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const CnfFormula f = oracle::random_cnf(n, 1 + static_cast<int>(rng() % 3), 1, 6, false, rng);
    const GadgetGraph gg = six_cnf_to_graph(f);
    const auto c = is_k_colorable(gg.graph, 3);
    ASSERT_EQ(c.has_value(), oracle::satisfiable(f)) << serialize_cnf(f);
    if (!c) continue;
    ++sat_count;
    EXPECT_TRUE(evaluate(f, decode_coloring(gg, *c)));
  }
}

TEST(Provenance, JsonRoundTrip) {
  const GadgetGraph gg = three_sat_to_coloring(CnfFormula(3, {{1, -2, 3}, {2}}));
  const std::string json = provenance_to_json(gg);
  const GadgetGraph back = provenance_from_json(gg.graph, json);
  EXPECT_EQ(back.base, gg.base);
  EXPECT_EQ(back.source_vars, gg.source_vars);
  EXPECT_EQ(back.literal_ports, gg.literal_ports);
  ASSERT_EQ(back.provenance.size(), gg.provenance.size());
  for (std::size_t i = 0; i < gg.provenance.size(); ++i) {
    EXPECT_EQ(back.provenance[i].kind, gg.provenance[i].kind);
    EXPECT_EQ(back.provenance[i].first, gg.provenance[i].first);
    EXPECT_EQ(back.provenance[i].ports, gg.provenance[i].ports);
  }
  EXPECT_THROW(provenance_from_json(gg.graph, "{}"), ParseError);
}

TEST(GadgetContracts, AllHold) {
  const GadgetReport report = verify_gadget_contracts(ScanOptions{2});
  for (const auto& c : report.checks) EXPECT_TRUE(c.ok) << c.gadget << " contract " << c.contract << ": " << c.detail;
  EXPECT_EQ(report.checks.size(), 9u);
}
