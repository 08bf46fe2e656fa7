#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ncdtree/distance_matrix.hpp"
#include "ncdtree/document.hpp"

namespace ncdtree {

struct BlockFrequencyOptions {
  std::size_t block_length = 6;
  std::string alphabet = "ACGT";
  /// Divide the whole matrix by its largest entry so it fits [0, 1].
  bool rescale = true;
};

/// |alphabet|^block_length; throws InvalidInput if it does not fit in memory.
std::size_t block_frequency_dimension(const BlockFrequencyOptions& options);

/// Counts of every overlapping block, indexed in base |alphabet| with the
/// alphabet's order as digit values. Throws InvalidInput naming the offset of
/// the first byte outside the alphabet.
std::vector<double> block_frequency_vector(const Document& doc, const BlockFrequencyOptions& options);

/// Pairwise Euclidean distance between block-frequency vectors.
DistanceMatrix block_frequency_distance(std::span<const Document> docs, const BlockFrequencyOptions& options = {});

}  // namespace ncdtree
