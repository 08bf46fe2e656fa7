#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncdtree/bytes.hpp"
#include "ncdtree/cluster_tree.hpp"
#include "ncdtree/distance_matrix.hpp"
#include "ncdtree/document.hpp"

namespace ncdtree {

struct SyntheticTreeMetric {
  ClusterTree tree;
  DistanceMatrix matrix;
};

/// d(a,b) = (L(a,b) + 1) / n for a != b, where L counts edges on the path.
DistanceMatrix tree_metric(const ClusterTree& tree);

/// Random tree on labels "x00", "x01", ... and its tree metric. The tree is
/// drawn from a substream of `seed`, not from Rng(seed) itself.
/// Throws InvalidInput for n < 4.
SyntheticTreeMetric gen_random_tree_metric(std::size_t n, std::uint64_t seed);

/// Labels used by gen_random_tree_metric.
std::vector<std::string> synthetic_labels(std::size_t n);

/// 11 singletons followed by "ab", "ac", "abc", "abd", "abcd", "ef", "efg",
/// "efgh", "hij", "hik", "ijk".
std::vector<std::string> canonical_tag_assignments();

/// Tags are named 'a', 'b', ...; each assignment lists the tags stamped into
/// one file and doubles as that file's label.
struct TagSpec {
  std::size_t tag_count = 11;
  std::size_t tag_size = 1024;
  std::size_t file_size = 81920;
  std::size_t placements = 10;
  std::vector<std::string> assignments = canonical_tag_assignments();

  /// Throws InvalidInput unless at least half of every file stays random.
  void validate() const;
};

struct TagCorpus {
  std::vector<Bytes> tags;
  std::vector<Document> files;
};

/// Random files, each overstamped `placements` times per assigned tag at
/// uniform offsets, tags in assignment order (later copies may overwrite
/// earlier ones).
TagCorpus gen_tag_corpus(const TagSpec& spec, std::uint64_t seed);

/// Number of tags two assignment strings have in common.
std::size_t shared_tag_count(std::string_view a, std::string_view b);

}  // namespace ncdtree
