#pragma once

#include <string>
#include <vector>

#include "ncdtree/cluster_tree.hpp"
#include "ncdtree/rng.hpp"

namespace ncdtree {

/// Random tree by sequential insertion: leaves 0..2 around one internal node,
/// then every further leaf subdivides a uniformly chosen existing edge. Every
/// labeled tree is reachable; at n = 5 the 15 trees are equally likely.
/// Throws InvalidInput for n < 4.
ClusterTree random_tree(std::vector<std::string> labels, Rng& rng);

enum class MutationKind { LeafSwap, SubtreeSwap, SubtreeTransfer };

const char* to_string(MutationKind kind) noexcept;

/// Exchanges the labels of two distinct uniformly chosen leaves.
bool mutate_leaf_swap(ClusterTree& tree, Rng& rng);

/// Rooted at the neighbor of the leaf with the smallest label, picks two
/// non-root internal nodes neither of which is an ancestor of the other and
/// exchanges their subtrees. Returns false (tree untouched) when no such pair
/// turns up within a bounded number of draws.
bool mutate_subtree_swap(ClusterTree& tree, Rng& rng);

/// Picks a uniform directed edge p -> u with p internal, splices p out, and
/// reinserts it with u's subtree on a uniform edge of the remainder. The old
/// position is among the choices.
bool mutate_subtree_transfer(ClusterTree& tree, Rng& rng);

bool apply_mutation(ClusterTree& tree, MutationKind kind, Rng& rng);

inline constexpr unsigned kMaxBurst = 64;

/// k >= 1 with P(k) = 2^-k, truncated at kMaxBurst.
unsigned sample_burst_size(Rng& rng);

/// Samples k and applies k simple mutations, each kind chosen uniformly.
/// Returns k.
unsigned full_mutation(ClusterTree& tree, Rng& rng);

}  // namespace ncdtree
