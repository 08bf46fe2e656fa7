#pragma once

#include <string>
#include <string_view>

#include "ncdtree/cluster_tree.hpp"

namespace ncdtree {

enum class TreeFormat { Dot, Newick };

TreeFormat tree_format_from_string(std::string_view name);

/// Undirected DOT graph. Leaves are `leaf_<node>` with the document label as
/// their `label`; internal nodes are `n<k>`.
std::string to_dot(const ClusterTree& tree);

/// Newick rooted at internal node n0. The rooting is for display only, which
/// a leading comment says.
std::string to_newick(const ClusterTree& tree);

std::string export_tree(const ClusterTree& tree, TreeFormat format);

/// Reads the DOT dialect written by `to_dot`. Throws ParseError.
ClusterTree parse_dot(std::string_view text);

}  // namespace ncdtree
