#include <gtest/gtest.h>

#include <cmath>

#include "ncdtree/errors.hpp"
#include "ncdtree/experiment.hpp"
#include "ncdtree/mutation.hpp"
#include "ncdtree/rng.hpp"

namespace ncdtree {
namespace {

TEST(Experiment, NamesRoundTrip) {
  for (auto k : {ExperimentKind::RandomTree, ExperimentKind::Tags, ExperimentKind::FileTypes})
    EXPECT_EQ(experiment_from_string(to_string(k)), k);
  EXPECT_THROW(experiment_from_string("nope"), InvalidInput);
}

TEST(Experiment, FiletypeGroup) {
  EXPECT_EQ(filetype_group("dna_3.seq"), "dna");
  EXPECT_EQ(filetype_group("plain"), "plain");
}

TEST(Experiment, MeanNcdBySharedTags) {
  DistanceMatrix m({"a", "ab", "b", "c"});
  auto set = [&](std::size_t i, std::size_t j, double v) { m(i, j) = m(j, i) = v; };
  set(0, 1, 0.5);  // 1 shared
  set(1, 2, 0.7);  // 1 shared
  set(0, 2, 0.9);  // 0
  set(0, 3, 1.0);  // 0
  set(1, 3, 0.8);  // 0
  set(2, 3, 0.9);  // 0
  auto means = mean_ncd_by_shared_tags(m);
  ASSERT_EQ(means.size(), 2u);
  EXPECT_DOUBLE_EQ(means[0], (0.9 + 1.0 + 0.8 + 0.9) / 4);
  EXPECT_DOUBLE_EQ(means[1], 0.6);
}

TEST(Experiment, RandomTreeRecoversGenerator) {
  ExperimentConfig config;
  config.kind = ExperimentKind::RandomTree;
  config.leaves = 10;
  config.corpus_seed = 3;
  config.search.seed = 3;
  auto report = run_experiment(config);
  EXPECT_TRUE(report.all_pass()) << report.to_text();
  ASSERT_TRUE(report.generator.has_value());
  EXPECT_EQ(report.search.score.s, 1.0);
  EXPECT_NE(report.to_text().find("check perfect-score: pass"), std::string::npos);
}

TEST(Experiment, FileTypesGroupTogether) {
  ExperimentConfig config;
  config.kind = ExperimentKind::FileTypes;
  config.codec = CodecSpec::builtin("lz");
  config.filetypes_dir = std::filesystem::path(NCDTREE_TEST_DATA_DIR) / "filetypes";
  config.search.seed = 1;
  auto report = run_experiment(config);
  EXPECT_EQ(report.matrix.size(), 16u);
  EXPECT_EQ(report.checks.size(), 4u);
  EXPECT_TRUE(report.all_pass()) << report.to_text();
}

TEST(Experiment, FileTypesNeedsDirectory) {
  ExperimentConfig config;
  config.kind = ExperimentKind::FileTypes;
  EXPECT_THROW(run_experiment(config), InvalidInput);
}

TEST(Experiment, FailingCheckIsReported) {
  Rng rng(0);
  ExperimentReport report{ExperimentKind::Tags, "x", DistanceMatrix{}, std::nullopt,
                          SearchResult{random_tree({"a", "b", "c", "d"}, rng), {}, {}},
                          {{"one", true, ""}, {"two", false, "why"}}};
  EXPECT_FALSE(report.all_pass());
  EXPECT_NE(report.to_text().find("check two: FAIL (why)"), std::string::npos);
}

}  // namespace
}  // namespace ncdtree
