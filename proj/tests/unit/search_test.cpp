#include <gtest/gtest.h>

#include "ncdtree/errors.hpp"
#include "ncdtree/generators.hpp"
#include "ncdtree/search.hpp"
#include "oracle/generators.hpp"
#include "oracle/oracle.hpp"

namespace ncdtree {
namespace {

void expect_trace_invariants(const SearchResult& r, const DistanceMatrix& m) {
  const auto& pts = r.trace.points;
  ASSERT_FALSE(pts.empty());
  EXPECT_EQ(pts.front().candidates, 0u);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    EXPECT_GE(pts[i].best_s, pts[i - 1].best_s);
    EXPECT_GE(pts[i].candidates, pts[i - 1].candidates);
  }
  EXPECT_EQ(pts.back().best_s, r.score.s);
  EXPECT_EQ(pts.back().candidates, r.trace.total_candidates);
  EXPECT_EQ(score(r.tree, m).s, r.score.s);
}

TEST(HillClimb, ReconstructsSyntheticTree) {
  auto synthetic = gen_random_tree_metric(10, 11);
  SearchConfig config;
  config.seed = 3;
  auto result = hill_climb(synthetic.matrix, config);
  EXPECT_EQ(result.trace.halt, HaltReason::Perfect);
  EXPECT_TRUE(QuartetScorer(synthetic.matrix).is_perfect(result.score, 1e-12));
  EXPECT_TRUE(same_quartet_topologies(result.tree, synthetic.tree));
  expect_trace_invariants(result, synthetic.matrix);
}

TEST(HillClimb, FindsTheExhaustiveOptimumForSmallN) {
  testgen::Gen gen(12);
  for (std::size_t n : {5u, 6u}) {
    for (int trial = 0; trial < 3; ++trial) {
      auto m = gen.symmetric_matrix(n);
      double best = -1;
      for (const auto& t : oracle::enumerate_trees(m.labels())) best = std::max(best, oracle::brute_force_score(t, m).s);
      SearchConfig config;
      config.seed = static_cast<std::uint64_t>(trial);
      config.max_stale = 2000;
      EXPECT_EQ(hill_climb(m, config).score.s, best) << "n=" << n << " trial " << trial;
    }
  }
}

TEST(HillClimb, AcceptanceIsStrict) {
  testgen::Gen gen(13);
  auto m = gen.symmetric_matrix(9);
  SearchConfig config;
  config.max_stale = 3000;
  auto r = hill_climb(m, config);
  const auto& pts = r.trace.points;
  // Only strict improvements are recorded, plus the closing point.
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) EXPECT_GT(pts[i].best_s, pts[i - 1].best_s);
  EXPECT_EQ(r.trace.halt, HaltReason::Stale);
}

TEST(HillClimb, AllEqualMatrixIsPerfectImmediately) {
  DistanceMatrix m({"a", "b", "c", "d", "e"});
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) m(i, j) = 0.5;
  auto r = hill_climb(m, {});
  EXPECT_EQ(r.trace.halt, HaltReason::Perfect);
  EXPECT_EQ(r.trace.total_candidates, 0u);
  EXPECT_EQ(r.score.s, 1.0);
}

TEST(HillClimb, ReproducibleWithOneWorker) {
  testgen::Gen gen(14);
  auto m = gen.symmetric_matrix(12);
  SearchConfig config;
  config.seed = 99;
  config.max_stale = 2000;
  auto a = hill_climb(m, config), b = hill_climb(m, config);
  EXPECT_EQ(a.tree, b.tree);
  EXPECT_EQ(a.trace.points, b.trace.points);
  EXPECT_EQ(trace_to_csv(a.trace), trace_to_csv(b.trace));
}

TEST(HillClimb, StaleLimitHalts) {
  testgen::Gen gen(15);
  auto m = gen.symmetric_matrix(10);
  SearchConfig config;
  config.max_stale = 5;
  auto r = hill_climb(m, config);
  EXPECT_EQ(r.trace.halt, HaltReason::Stale);
  expect_trace_invariants(r, m);
}

TEST(HillClimb, TimeBudgetHalts) {
  testgen::Gen gen(16);
  auto m = gen.symmetric_matrix(30);
  SearchConfig config;
  config.max_stale = 1'000'000'000;
  config.time_budget = 0.3;
  auto r = hill_climb(m, config);
  EXPECT_EQ(r.trace.halt, HaltReason::Time);
  expect_trace_invariants(r, m);
}

TEST(HillClimb, InvariantCheckingMode) {
  testgen::Gen gen(17);
  auto m = gen.symmetric_matrix(8);
  SearchConfig config;
  config.check_invariants = true;
  config.max_stale = 500;
  EXPECT_NO_THROW(hill_climb(m, config));
}

TEST(HillClimb, ParallelClimbersFindThePerfectTree) {
  auto synthetic = gen_random_tree_metric(12, 21);
  SearchConfig config;
  config.workers = 3;
  auto r = hill_climb(synthetic.matrix, config);
  EXPECT_EQ(r.trace.halt, HaltReason::Perfect);
  EXPECT_TRUE(same_quartet_topologies(r.tree, synthetic.tree));
  expect_trace_invariants(r, synthetic.matrix);
}

TEST(HillClimb, ParallelStaleRun) {
  testgen::Gen gen(18);
  auto m = gen.symmetric_matrix(9);
  SearchConfig config;
  config.workers = 2;
  config.max_stale = 300;
  auto r = hill_climb(m, config);
  EXPECT_EQ(r.trace.halt, HaltReason::Stale);
  EXPECT_TRUE(r.tree.is_valid());
  EXPECT_EQ(score(r.tree, m).s, r.score.s);
}

TEST(HillClimb, InputValidation) {
  testgen::Gen gen(19);
  EXPECT_THROW(hill_climb(gen.symmetric_matrix(3), {}), InvalidInput);
  auto asym = gen.symmetric_matrix(5);
  asym(0, 1) += 0.01;
  EXPECT_THROW(hill_climb(asym, {}), InvalidInput);
  SearchConfig bad;
  bad.max_stale = 0;
  EXPECT_THROW(hill_climb(gen.symmetric_matrix(5), bad), InvalidInput);
  bad = {};
  bad.workers = 0;
  EXPECT_THROW(hill_climb(gen.symmetric_matrix(5), bad), InvalidInput);
}

TEST(Trace, Csv) {
  SearchTrace t;
  t.points = {{0, 0.25}, {7, 0.5}, {9, 0.5}};
  EXPECT_EQ(trace_to_csv(t), "candidates,best_S\n0,0.25\n7,0.5\n9,0.5\n");
}

}  // namespace
}  // namespace ncdtree
