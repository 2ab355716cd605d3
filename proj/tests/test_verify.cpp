#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hyperboot/constructions.hpp"
#include "hyperboot/verify.hpp"

using namespace hyperboot;

TEST(Civilised, SlowConstructionPasses) {
  for (int n = 2; n <= 6; ++n) {
    const LabeledConstruction c = slow3(n);
    const CivilisedReport rep = check_civilised(c.g0, c.e0);
    EXPECT_TRUE(rep.cond1_ok && rep.cond2_ok && rep.cond3_ok) << "n=" << n;
    EXPECT_FALSE(rep.first_violation) << rep.first_violation->detail;
    EXPECT_EQ(rep.T, closed_form_T(n));
  }
  const LabeledConstruction c = slow3(3);
  EXPECT_TRUE(check_civilised(c.g0, c.e0, EngineKind::naive).ok());
}

TEST(Civilised, SlowConstructionCopiesSeeOnlyPastDistinguishedEdges) {
  // Each H_t holds e_{t-1} and e_t and no later distinguished edge; the only
  // extra distinguished faces are earlier top-chain edges t_i m_l m_{l+1}.
  for (int n = 2; n <= 5; ++n) {
    const LabeledConstruction c = slow3(n);
    PercolationConfig cfg;
    cfg.k = 4;
    const RunResult res = run(c.g0, cfg);
    const EdgeCodec& codec = c.g0.codec();
    std::vector<EdgeKey> dist{codec.key(c.e0)};
    for (const auto& round : res.rounds) dist.push_back(codec.key(round.added.at(0).edge));
    std::map<EdgeKey, std::size_t> index;
    for (std::size_t i = 0; i < dist.size(); ++i) index.emplace(dist[i], i);
    for (const auto& round : res.rounds) {
      const auto& w = round.added[0].witness;
      std::set<std::size_t> hit;
      for (unsigned drop = 0; drop < 4; ++drop) {
        std::vector<VertexId> face;
        for (unsigned i = 0; i < 4; ++i)
          if (i != drop) face.push_back(w[i]);
        if (auto it = index.find(codec.key(std::span<const VertexId>(face))); it != index.end()) hit.insert(it->second);
      }
      ASSERT_TRUE(hit.count(round.t - 1) && hit.count(round.t)) << "n=" << n << " t=" << round.t;
      EXPECT_EQ(*hit.rbegin(), round.t);
      for (std::size_t i : hit) {
        if (i + 1 >= round.t) continue;
        const Edge extra = codec.unkey(dist[i]);
        const auto top = std::count_if(extra.begin(), extra.end(),
                                       [&](VertexId v) { return c.labels[v].kind == Label::Kind::top; });
        const auto mid = std::count_if(extra.begin(), extra.end(),
                                       [&](VertexId v) { return c.labels[v].kind == Label::Kind::middle; });
        EXPECT_TRUE(top == 1 && mid == 2) << "n=" << n << " t=" << round.t;
      }
    }
  }
}

TEST(Civilised, TwoTetrahedraOnOneFace) {
  Hypergraph g(3, 5);
  for (EdgeKey key = 1; key < g.edge_space(); ++key) g.add_key(key);  // all but {0,1,2}
  const CivilisedReport rep = check_civilised(g, Edge::from_sorted({2, 3, 4}));
  EXPECT_FALSE(rep.cond1_ok);
  ASSERT_TRUE(rep.first_violation);
  EXPECT_EQ(rep.first_violation->condition, 1);
  EXPECT_EQ(rep.first_violation->round, 1u);
  EXPECT_EQ(rep.T, 1u);
}

TEST(Civilised, InjectedEdgeIsCaught) {
  LabeledConstruction c = slow3(3);
  c.g0.add_edge(c.edge({Label::t(1), Label::b(1), Label::m(5)}));
  const CivilisedReport rep = check_civilised(c.g0, c.e0);
  EXPECT_FALSE(rep.ok());
  ASSERT_TRUE(rep.first_violation);
  // Frozen from the checker: round 16 adds t1 b-2 m4 and b1 m4 m5.
  EXPECT_EQ(rep.first_violation->condition, 1);
  EXPECT_EQ(rep.first_violation->round, 16u);
  EXPECT_TRUE(rep.cond3_ok);
  const Edge extra = c.edge({Label::b(1), Label::m(4), Label::m(5)});
  EXPECT_NE(rep.first_violation->detail.find((std::ostringstream{} << extra).str()), std::string::npos)
      << rep.first_violation->detail;
}

TEST(Civilised, RejectsMissingE0) {
  const LabeledConstruction c = slow3(2);
  EXPECT_THROW(check_civilised(c.g0, Edge::from_sorted({0, 1, 2})), InvalidInput);
}

TEST(Civilised, NoInfectionWithoutE0) {
  for (int n = 2; n <= 8; ++n) {
    LabeledConstruction c = slow3(n);
    c.g0.remove_edge(c.e0);
    EXPECT_TRUE(infect_round_naive(c.g0, 4).empty()) << "n=" << n;
  }
}

TEST(Civilised, ReportsCondition3) {
  // G0 - e0 still completes {0,1,2,3}.
  Hypergraph g(3, 5);
  for (const auto& e : std::vector<std::vector<VertexId>>{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}})
    g.add_edge(Edge::from_sorted(e));
  const CivilisedReport rep = check_civilised(g, Edge::from_sorted({0, 1, 4}));
  EXPECT_FALSE(rep.cond3_ok);
  ASSERT_TRUE(rep.first_violation);
}

TEST(Sequence, FullMatchSmall) {
  const SequenceDiff two = check_sequence(2);
  EXPECT_TRUE(two.full_match());
  EXPECT_EQ(two.matched_prefix_len, 30u);
  EXPECT_EQ(two.expected_len, 30u);

  const SequenceDiff five = check_sequence(5);
  EXPECT_TRUE(five.full_match());
  EXPECT_EQ(five.matched_prefix_len, 474u);
  EXPECT_EQ(five.matched_prefix_len, closed_form_T(5));
}

TEST(Sequence, NaiveAgrees) {
  for (int n = 2; n <= 4; ++n) {
    const SequenceDiff diff = check_sequence(n, EngineKind::naive);
    EXPECT_TRUE(diff.full_match()) << "n=" << n;
    EXPECT_EQ(diff.matched_prefix_len, closed_form_T(n));
  }
}

TEST(Sequence, MissingGadgetEdgeStallsAtRoundOne) {
  LabeledConstruction c = slow3(3);
  const Edge removed = c.edge({Label::b(1), Label::m(0), Label::m(1)});
  ASSERT_TRUE(c.g0.remove_edge(removed));
  const SequenceDiff diff = compare_sequence(c.g0, expected_edges(3));
  ASSERT_FALSE(diff.full_match());
  EXPECT_EQ(diff.matched_prefix_len, 0u);
  EXPECT_EQ(diff.first_mismatch->round, 1u);
  EXPECT_EQ(*diff.first_mismatch->expected, c.edge({Label::t(1), Label::b(1), Label::m(1)}));
  EXPECT_TRUE(diff.first_mismatch->actual.empty());
}

TEST(Sequence, ExtraRoundsAreAMismatch) {
  const LabeledConstruction c = slow3(2);
  std::vector<Edge> truncated = expected_edges(2);
  truncated.pop_back();
  const SequenceDiff diff = compare_sequence(c.g0, truncated);
  ASSERT_FALSE(diff.full_match());
  EXPECT_EQ(diff.matched_prefix_len, 29u);
  EXPECT_EQ(diff.first_mismatch->round, 30u);
  EXPECT_FALSE(diff.first_mismatch->expected);
  EXPECT_EQ(diff.first_mismatch->actual.size(), 1u);
}

TEST(Scaling, RowsAndRatios) {
  const auto single = scaling_report({10});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].T, 3854u);
  EXPECT_FALSE(single[0].ratio_vs_half_n);

  const auto rows = scaling_report({8, 2, 4}, EngineKind::incremental, 2);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].n, 2);
  EXPECT_EQ(rows[1].n, 4);
  EXPECT_EQ(rows[2].n, 8);
  EXPECT_LT(rows[0].T, rows[1].T);
  EXPECT_LT(rows[1].T, rows[2].T);
  EXPECT_FALSE(rows[0].ratio_vs_half_n);
  ASSERT_TRUE(rows[1].ratio_vs_half_n);
  EXPECT_DOUBLE_EQ(*rows[1].ratio_vs_half_n, 242.0 / 30.0);
  for (const auto& row : rows) {
    EXPECT_EQ(row.edges_final, row.edges_initial + row.T);
    EXPECT_EQ(row.vertices, unsigned(9 * row.n - 4));
  }
  EXPECT_THROW(scaling_report({1}), UnsupportedParameter);
}

TEST(Scaling, CsvLayout) {
  std::vector<ScalingRow> rows(2);
  rows[0] = {10, 3854, 86, 959, 4813, 12.5, std::nullopt};
  rows[1] = {20, 31314, 176, 3729, 35043, 100.0, 31314.0 / 3854.0};
  std::ostringstream out;
  write_scaling_csv(out, rows);
  EXPECT_EQ(out.str(),
            "n,T,vertices,edges_initial,edges_final,wall_ms,ratio_vs_half_n\n"
            "10,3854,86,959,4813,12.500,\n"
            "20,31314,176,3729,35043,100.000,8.125065\n");
}
