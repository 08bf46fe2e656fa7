#include <gtest/gtest.h>

#include <regex>

#include "ncdtree/errors.hpp"
#include "ncdtree/tree_io.hpp"
#include "oracle/generators.hpp"

namespace ncdtree {
namespace {

ClusterTree ab_cd() {
  return ClusterTree::from_edges({"a", "b", "c", "d"}, std::vector<Edge>{{0, 4}, {1, 4}, {4, 5}, {2, 5}, {3, 5}});
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

TEST(Dot, FourLeafTreeHasSixNodesAndFiveEdges) {
  const std::string dot = to_dot(ab_cd());
  EXPECT_EQ(dot.rfind("graph ", 0), 0u);
  EXPECT_EQ(count(dot, "[label="), 6u);
  EXPECT_EQ(count(dot, " -- "), 5u);
  EXPECT_NE(dot.find("label=\"a\""), std::string::npos);
  EXPECT_NE(dot.find("n0 [label=\"n0\""), std::string::npos);
  EXPECT_NE(dot.find("n1 [label=\"n1\""), std::string::npos);
}

TEST(Dot, RoundTripReproducesTheTree) {
  testgen::Gen gen(9);
  for (int i = 0; i < 50; ++i) {
    auto tree = gen.tree(gen.size(4, 25));
    auto back = parse_dot(to_dot(tree));
    EXPECT_EQ(back, tree);
    EXPECT_EQ(to_dot(back), to_dot(tree));
  }
}

TEST(Dot, LabelsWithQuotesSurvive) {
  auto tree = ClusterTree::from_edges({"a\"q", "b\\s", "c", "n0"}, std::vector<Edge>{{0, 4}, {1, 4}, {4, 5}, {2, 5}, {3, 5}});
  EXPECT_EQ(parse_dot(to_dot(tree)), tree);
}

TEST(Dot, ParseErrors) {
  EXPECT_THROW(parse_dot(""), ParseError);
  EXPECT_THROW(parse_dot("digraph x {}"), ParseError);
  EXPECT_THROW(parse_dot("graph x { leaf_0 [label=\"a\"]; "), ParseError);
  EXPECT_THROW(parse_dot("graph x { leaf_0 -- n0; }"), ParseError);
  std::string dot = to_dot(ab_cd());
  dot.replace(dot.find("leaf_3 -- n1"), 12, "leaf_3 -- n0");
  EXPECT_THROW(parse_dot(dot), ParseError);
}

TEST(Newick, SiblingPairsAreGrouped) {
  const std::string nwk = to_newick(ab_cd());
  EXPECT_EQ(nwk.front(), '[');
  EXPECT_EQ(nwk.substr(nwk.size() - 2), ";\n");
  const std::string body = nwk.substr(nwk.find('\n') + 1);
  // Rooted at n0, which holds a and b; c and d hang below n1.
  EXPECT_EQ(body, "(a,b,(c,d)n1)n0;\n");
}

TEST(Newick, BalancedAndListsEveryLeaf) {
  testgen::Gen gen(10);
  auto tree = gen.tree(20);
  const std::string nwk = to_newick(tree);
  const std::string body = nwk.substr(nwk.find('\n') + 1);
  EXPECT_EQ(count(body, "("), count(body, ")"));
  EXPECT_EQ(count(body, "("), tree.internal_count());
  for (const auto& l : tree.labels()) EXPECT_TRUE(std::regex_search(body, std::regex("[(,]" + l + "[,)]"))) << l;
}

TEST(Newick, QuotesSpecialLabels) {
  auto tree = ClusterTree::from_edges({"a(1)", "it's", "c", "d"}, std::vector<Edge>{{0, 4}, {1, 4}, {4, 5}, {2, 5}, {3, 5}});
  const std::string nwk = to_newick(tree);
  EXPECT_NE(nwk.find("'a(1)'"), std::string::npos);
  EXPECT_NE(nwk.find("'it''s'"), std::string::npos);
}

TEST(TreeFormat, Names) {
  EXPECT_EQ(tree_format_from_string("dot"), TreeFormat::Dot);
  EXPECT_EQ(tree_format_from_string("newick"), TreeFormat::Newick);
  EXPECT_THROW(tree_format_from_string("nexus"), InvalidInput);
  EXPECT_EQ(export_tree(ab_cd(), TreeFormat::Newick), to_newick(ab_cd()));
}

}  // namespace
}  // namespace ncdtree
