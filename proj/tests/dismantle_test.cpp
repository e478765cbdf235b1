#include <random>
#include <set>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "oracle.hpp"
#include "support.hpp"

namespace hyperci {
namespace {

using ::testing::ElementsAre;
using testing::fixture;
using testing::fixture_edges;

DismantleOptions one_at_a_time(Normalization norm = Normalization::remaining) {
  DismantleOptions o;
  o.batch_fraction = 1.0 / 7.0;
  o.norm = norm;
  return o;
}

std::vector<std::string> sequence(const Trajectory& t) {
  std::vector<std::string> out;
  for (const auto& b : t.batches) out.insert(out.end(), b.removed.begin(), b.removed.end());
  return out;
}

TEST(StrategyParse, TokensAndRadius) {
  EXPECT_EQ(Strategy::parse("hyperci"), Strategy::hyper_ci(1));
  EXPECT_EQ(Strategy::parse("hyperci:3").radius(), 3);
  EXPECT_EQ(Strategy::parse("ci:2"), Strategy::ci(2));
  EXPECT_TRUE(Strategy::parse("ci", true).adaptive());
  EXPECT_FALSE(Strategy::parse("ci").adaptive());
  EXPECT_TRUE(Strategy::parse("hda").adaptive());
  EXPECT_FALSE(Strategy::parse("hhd").adaptive());
  EXPECT_EQ(Strategy::parse("hyperci:2").name(), "hyperci:2");
  EXPECT_THROW(Strategy::parse("hd:2"), Error);
  EXPECT_THROW(Strategy::parse("pagerank"), Error);
  EXPECT_THROW(Strategy::parse("hyperci:0"), Error);
  EXPECT_THROW(Strategy::parse("hyperci:x"), Error);
}

TEST(StopParse, Forms) {
  EXPECT_EQ(StopCondition::parse("all"), StopCondition::all());
  EXPECT_EQ(StopCondition::parse("frac=0.5"), StopCondition::fraction(0.5));
  EXPECT_EQ(StopCondition::parse("sigma=0.1"), StopCondition::sigma_below(0.1));
  EXPECT_THROW(StopCondition::parse("frac=0"), Error);
  EXPECT_THROW(StopCondition::parse("sigma=1.5"), Error);
  EXPECT_THROW(StopCondition::parse("never"), Error);
}

TEST(BatchSize, FloorOfOriginalCountAtLeastOne) {
  EXPECT_EQ(batch_size_for(0.01, 1676), 16u);
  EXPECT_EQ(batch_size_for(0.01, 50), 1u);
  EXPECT_EQ(batch_size_for(1.0 / 7.0, 7), 1u);
  EXPECT_EQ(batch_size_for(0.29, 100), 29u);
  EXPECT_THROW(batch_size_for(0.0, 10), Error);
  EXPECT_THROW(batch_size_for(1.5, 10), Error);
}

TEST(Dismantle, HyperCiRemovesX2First) {
  auto o = one_at_a_time();
  o.stop = StopCondition::fraction(1.0 / 7.0);
  const auto t = dismantle(fixture(), Strategy::hyper_ci(1), o);
  ASSERT_EQ(t.batches.size(), 1u);
  EXPECT_THAT(t.batches[0].removed, ElementsAre("x2"));
  EXPECT_NEAR(t.batches[0].sigma_remaining, 4.0 / 6.0, 1e-12);
  EXPECT_NEAR(t.batches[0].sigma_original, 4.0 / 7.0, 1e-12);
  EXPECT_NEAR(t.anc, 4.0 / 6.0, 1e-9);
  EXPECT_NEAR(anc(t), 0.6667, 1e-4);
}

TEST(Dismantle, StaticHhdOrder) {
  const auto t = dismantle(fixture(), Strategy::hhd(), one_at_a_time());
  EXPECT_THAT(sequence(t), ElementsAre("x2", "x3", "x6", "x0", "x1", "x4", "x5"));
  EXPECT_NEAR(t.anc, 19.0 / 30.0, 1e-9);
}

TEST(Dismantle, AdaptiveHyperCiSequence) {
  const auto t = dismantle(fixture(), Strategy::hyper_ci(1), one_at_a_time());
  EXPECT_THAT(sequence(t), ElementsAre("x2", "x6", "x0", "x1", "x3", "x4", "x5"));
  EXPECT_NEAR(t.anc, 127.0 / 210.0, 1e-9);
  const auto o = dismantle(fixture(), Strategy::hyper_ci(1), one_at_a_time(Normalization::original));
  EXPECT_NEAR(o.anc, 13.0 / 49.0, 1e-9);
}

TEST(Dismantle, WholeGraphInOneBatch) {
  DismantleOptions o;
  o.batch_fraction = 1.0;
  o.norm = Normalization::original;
  const auto t = dismantle(fixture(), Strategy::hd(), o);
  ASSERT_EQ(t.batches.size(), 1u);
  EXPECT_EQ(t.batches[0].removed.size(), 7u);
  EXPECT_EQ(t.batches[0].sigma_original, 0.0);
  EXPECT_EQ(t.anc, 0.0);
}

TEST(Dismantle, TwoNodeEdgeGivesOneHalf) {
  DismantleOptions o;
  o.batch_fraction = 0.5;
  const auto t = dismantle(Hypergraph::build({{"a", "b"}}), Strategy::hhd(), o);
  ASSERT_EQ(t.batches.size(), 2u);
  EXPECT_EQ(t.batches[0].ratio, 1.0);
  EXPECT_EQ(t.batches[1].ratio, 0.0);
  EXPECT_NEAR(t.anc, 0.5, 1e-9);
}

TEST(Dismantle, StopConditions) {
  auto o = one_at_a_time(Normalization::original);
  o.stop = StopCondition::fraction(0.4);
  EXPECT_EQ(dismantle(fixture(), Strategy::hhd(), o).removed_count(), 3u);
  o.stop = StopCondition::sigma_below(0.3);
  const auto t = dismantle(fixture(), Strategy::hhd(), o);
  // sigma_original: 4/7, 3/7, 2/7 -> stops after the third removal
  EXPECT_EQ(t.removed_count(), 3u);
  EXPECT_LT(t.batches.back().sigma_original, 0.3);
}

TEST(Dismantle, BatchesKeepOriginalSize) {
  DismantleOptions o;
  o.batch_fraction = 0.3;  // floor(2.1) = 2
  const auto t = dismantle(fixture(), Strategy::hhda(), o);
  EXPECT_EQ(t.batch_size, 2u);
  ASSERT_EQ(t.batches.size(), 4u);
  EXPECT_EQ(t.batches.back().removed.size(), 1u);
  EXPECT_NEAR(t.batches.back().frac_removed, 1.0, 1e-12);
}

TEST(Dismantle, PerNodeRescoringDiffersFromBatch) {
  DismantleOptions o;
  o.batch_fraction = 0.3;
  const auto batch = dismantle(fixture(), Strategy::hyper_ci(1), o);
  o.per_node = true;
  const auto single = dismantle(fixture(), Strategy::hyper_ci(1), o);
  // per-batch takes x2 and x6 together; per-node rescoring also lands on x6
  EXPECT_THAT(batch.batches[0].removed, ElementsAre("x2", "x6"));
  EXPECT_THAT(single.batches[0].removed, ElementsAre("x2", "x6"));
  EXPECT_EQ(sequence(single), sequence(dismantle(fixture(), Strategy::hyper_ci(1), one_at_a_time())));
}

TEST(Dismantle, Errors) {
  DismantleOptions o;
  o.batch_fraction = 0.0;
  EXPECT_THROW(dismantle(fixture(), Strategy::hhd(), o), Error);
  EXPECT_THROW(dismantle(Hypergraph{}, Strategy::hhd()), Error);
  Trajectory empty;
  EXPECT_THROW(anc(empty), Error);
}

TEST(Compare, FixtureRows) {
  const auto rows = compare(fixture(), {Strategy::hhd(), Strategy::hyper_ci(1)}, one_at_a_time());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_LE(rows[1].anc, rows[0].anc);
  EXPECT_NEAR(rows[0].anc, 19.0 / 30.0, 1e-9);
  EXPECT_NEAR(rows[1].anc, 127.0 / 210.0, 1e-9);
  EXPECT_EQ(compare(fixture(), {Strategy::hd()}).size(), 1u);
  EXPECT_THROW(compare(fixture(), {}), Error);
}

TEST(LSweep, MatchesDirectRunsAndIsDeterministic) {
  const auto o = one_at_a_time();
  const auto sweep = l_sweep(fixture(), StrategyKind::hyper_ci, {1, 2}, o);
  ASSERT_EQ(sweep.size(), 2u);
  EXPECT_EQ(sweep[0].anc, dismantle(fixture(), Strategy::hyper_ci(1), o).anc);
  EXPECT_EQ(sweep[1].anc, dismantle(fixture(), Strategy::hyper_ci(2), o).anc);
  EXPECT_NEAR(sweep[1].anc, 6.0 / 7.0, 1e-9);
  const auto again = l_sweep(fixture(), StrategyKind::hyper_ci, {1, 2}, o);
  EXPECT_EQ(sweep[0].anc, again[0].anc);
  EXPECT_EQ(sweep[1].anc, again[1].anc);
  EXPECT_THROW(l_sweep(fixture(), StrategyKind::hhd, {1}, o), Error);
  EXPECT_THROW(l_sweep(fixture(), StrategyKind::ci, {}, o), Error);
}

class DismantleCorpus : public ::testing::TestWithParam<unsigned> {};

TEST_P(DismantleCorpus, SingleNodeBatchesMatchResimulation) {
  std::mt19937 rng(GetParam());
  const std::vector<Strategy> strategies{Strategy::hd(),     Strategy::hda(),   Strategy::hhd(),
                                         Strategy::hhda(),   Strategy::ci(1),   Strategy::ci(2, true),
                                         Strategy::hyper_ci(1), Strategy::hyper_ci(2)};
  testing::RandomShape shape;
  shape.max_nodes = 12;
  shape.max_edges = 14;
  for (int trial = 0; trial < 10; ++trial) {
    const auto edges = testing::random_edges(rng, shape);
    const auto h = Hypergraph::build(edges);
    for (const auto& s : strategies) {
      for (auto norm : {Normalization::remaining, Normalization::original}) {
        DismantleOptions o;
        o.batch_fraction = 1.0 / static_cast<double>(h.node_count());
        o.norm = norm;
        o.gcc_rule = norm == Normalization::original ? GccRule::most_hyperedges : GccRule::most_nodes;
        const auto t = dismantle(h, s, o);
        const auto ref = testing::oracle::resimulate(edges, s.kind(), s.radius(), s.adaptive(),
                                                     norm, o.gcc_rule);
        ASSERT_EQ(t.batches.size(), ref.steps.size());
        for (std::size_t k = 0; k < ref.steps.size(); ++k) {
          ASSERT_EQ(t.batches[k].removed.size(), 1u);
          EXPECT_EQ(t.batches[k].removed[0], ref.steps[k].removed) << s.name() << " step " << k;
          EXPECT_NEAR(t.batches[k].sigma_remaining, ref.steps[k].sigma_remaining, 1e-12);
          EXPECT_NEAR(t.batches[k].sigma_original, ref.steps[k].sigma_original, 1e-12);
        }
        EXPECT_NEAR(t.anc, ref.anc, 1e-12) << s.name();
      }
    }
  }
}

TEST_P(DismantleCorpus, OriginalNormProperties) {
  std::mt19937 rng(GetParam() + 50);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = Hypergraph::build(testing::random_edges(rng));
    for (const auto& s : {Strategy::hda(), Strategy::hhd(), Strategy::hyper_ci(1)}) {
      DismantleOptions o;
      o.batch_fraction = 0.1;
      o.norm = Normalization::original;
      const auto t = dismantle(h, s, o);
      EXPECT_GE(t.anc, 0.0);
      EXPECT_LE(t.anc, 1.0);
      double prev = t.initial_sigma;
      std::set<std::string> removed;
      for (const auto& b : t.batches) {
        EXPECT_LE(b.sigma_original, prev + 1e-12);
        EXPECT_LE(b.ratio, 1.0 + 1e-12);
        prev = b.sigma_original;
        for (const auto& l : b.removed) EXPECT_TRUE(removed.insert(l).second);
      }
      EXPECT_EQ(removed.size(), h.node_count());
    }
  }
}

TEST_P(DismantleCorpus, BatchesFollowTheRankThatProducedThem) {
  std::mt19937 rng(GetParam() + 90);
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = Hypergraph::build(testing::random_edges(rng));
    DismantleOptions o;
    o.batch_fraction = 0.2;
    const auto t = dismantle(h, Strategy::hyper_ci(1), o);
    Hypergraph current = h;
    for (const auto& b : t.batches) {
      const auto order = rank(score_hyper_ci(current, 1));
      std::vector<NodeId> victims;
      for (std::size_t i = 0; i < b.removed.size(); ++i) {
        EXPECT_EQ(current.label(order[i]), b.removed[i]);
        victims.push_back(order[i]);
      }
      current = current.remove_nodes(victims);
    }
    // static strategy: the concatenated batches are the initial rank order
    const auto st = dismantle(h, Strategy::hd(), o);
    const auto order = rank(score_hd(h));
    std::size_t i = 0;
    for (const auto& b : st.batches)
      for (const auto& l : b.removed) EXPECT_EQ(l, h.label(order[i++]));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DismantleCorpus, ::testing::Values(21u, 22u, 23u));

}  // namespace
}  // namespace hyperci
