#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncdtree/codec.hpp"
#include "ncdtree/distance_matrix.hpp"
#include "ncdtree/generators.hpp"
#include "ncdtree/ncd.hpp"
#include "ncdtree/search.hpp"

namespace ncdtree {

enum class ExperimentKind { RandomTree, Tags, FileTypes };

std::string_view to_string(ExperimentKind kind);
ExperimentKind experiment_from_string(std::string_view name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::RandomTree;
  CodecSpec codec = CodecSpec::builtin("blocksort");
  MatrixOptions matrix;
  SearchConfig search;
  std::uint64_t corpus_seed = 1;
  std::size_t leaves = 18;              // randomtree
  TagSpec tags;                         // tags
  std::filesystem::path filetypes_dir;  // filetypes: files named <group>_<name>
  double min_tag_score = 0.85;
};

struct ExperimentCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExperimentReport {
  ExperimentKind kind = ExperimentKind::RandomTree;
  std::string codec;
  DistanceMatrix matrix;
  std::optional<ClusterTree> generator;  // randomtree only
  SearchResult search;
  std::vector<ExperimentCheck> checks;

  bool all_pass() const;
  std::string to_text() const;
};

/// Mean NCD over unordered pairs grouped by how many tags the two labels
/// share; index k holds the mean for k shared tags (NaN if no such pair).
std::vector<double> mean_ncd_by_shared_tags(const DistanceMatrix& matrix);

/// Group of a filetypes label: the part before the first '_'.
std::string filetype_group(std::string_view label);

ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace ncdtree
