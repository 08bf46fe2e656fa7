#include <gtest/gtest.h>

#include <cmath>

#include "ncdtree/distance_matrix.hpp"
#include "ncdtree/errors.hpp"

namespace ncdtree {
namespace {

DistanceMatrix sample() {
  DistanceMatrix m({"a", "b", "c"});
  m(0, 1) = m(1, 0) = 0.123456789012345678;
  m(0, 2) = m(2, 0) = 1.0 / 3.0;
  m(1, 2) = m(2, 1) = 0.5;
  m(1, 1) = 0.002;
  return m;
}

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_matrix(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(DistanceMatrix, LabelsAreValidated) {
  EXPECT_THROW(DistanceMatrix({"a", "a"}), InvalidInput);
  EXPECT_THROW(DistanceMatrix({"a", ""}), InvalidInput);
  EXPECT_THROW(DistanceMatrix({"a b"}), InvalidInput);
  EXPECT_THROW(DistanceMatrix({"a", "b"}, {0, 1, 1}), InvalidInput);
}

TEST(DistanceMatrix, IndexOfAndSymmetry) {
  auto m = sample();
  EXPECT_EQ(m.index_of("c"), 2u);
  EXPECT_FALSE(m.index_of("z"));
  EXPECT_TRUE(m.is_symmetric());
  m(0, 1) += 1e-17 + 1e-16;
  EXPECT_FALSE(m.is_symmetric());
}

TEST(MatrixText, FormatHasCountThenRows) {
  const std::string text = to_text(sample());
  EXPECT_EQ(text.substr(0, 2), "3\n");
  EXPECT_NE(text.find("a 0 0.123456789012346 0.333333333333333\n"), std::string::npos) << text;
  EXPECT_NE(text.find("b 0.123456789012346 0.002 0.5\n"), std::string::npos) << text;
}

TEST(MatrixText, RoundTripKeepsFifteenDigits) {
  auto m = sample();
  auto back = parse_matrix(to_text(m));
  EXPECT_EQ(back.labels(), m.labels());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(back(i, j), m(i, j), 1e-15);
  EXPECT_EQ(to_text(back), to_text(m));
}

TEST(MatrixText, ToleratesExtraWhitespace) {
  auto m = parse_matrix("2\n  x   0  0.5 \n\ny 0.5 0\n");
  EXPECT_EQ(m(0, 1), 0.5);
}

TEST(MatrixText, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line(""), 1u);
  EXPECT_EQ(parse_error_line("two\n"), 1u);
  EXPECT_EQ(parse_error_line("2\na 0 1\n"), 3u);               // missing row
  EXPECT_EQ(parse_error_line("2\na 0 1\nb 1\n"), 3u);          // short row
  EXPECT_EQ(parse_error_line("2\na 0 1\nb 1 0 7\n"), 3u);      // long row
  EXPECT_EQ(parse_error_line("2\na 0 x\nb 1 0\n"), 2u);        // not a number
  EXPECT_EQ(parse_error_line("2\na 0 nan\nb 1 0\n"), 2u);      // non-finite
  EXPECT_EQ(parse_error_line("2\na 0 1\na 1 0\n"), 3u);        // duplicate label
  EXPECT_EQ(parse_error_line("2\na 0 1\nb 1 0\nc 0 0\n"), 4u);  // trailing data
  EXPECT_THROW(parse_matrix("2\na 0 inf\nb 1 0\n"), InvalidInput);
}

TEST(MatrixText, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "ncdtree-matrix-roundtrip.txt";
  save_matrix(path, sample());
  EXPECT_EQ(to_text(load_matrix(path)), to_text(sample()));
  std::filesystem::remove(path);
  EXPECT_THROW(load_matrix(path), IoError);
}

}  // namespace
}  // namespace ncdtree
