#include "ncdtree/generators.hpp"

#include <algorithm>
#include <set>

#include "ncdtree/errors.hpp"
#include "ncdtree/mutation.hpp"
#include "ncdtree/rng.hpp"

namespace ncdtree {

namespace {

// Substream ids passed to derive_seed.
constexpr std::uint64_t kTreeStream = 0x7472;
constexpr std::uint64_t kTagStream = 0x7467;

}  // namespace

DistanceMatrix tree_metric(const ClusterTree& tree) {
  const std::size_t n = tree.leaf_count();
  const auto lengths = tree.leaf_distances();
  DistanceMatrix m(tree.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = i == j ? 0.0 : (lengths[i * n + j] + 1.0) / static_cast<double>(n);
  m.metadata["generator"] = "tree-metric";
  return m;
}

std::vector<std::string> synthetic_labels(std::size_t n) {
  const std::size_t width = std::max<std::size_t>(2, std::to_string(n - 1).size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    std::string digits = std::to_string(i);
    labels.push_back("x" + std::string(width - digits.size(), '0') + digits);
  }
  return labels;
}

SyntheticTreeMetric gen_random_tree_metric(std::size_t n, std::uint64_t seed) {
  if (n < 4) throw InvalidInput("a tree needs at least 4 leaves, got " + std::to_string(n));
  Rng rng(derive_seed(seed, kTreeStream));
  ClusterTree tree = random_tree(synthetic_labels(n), rng);
  DistanceMatrix matrix = tree_metric(tree);
  return {std::move(tree), std::move(matrix)};
}

std::vector<std::string> canonical_tag_assignments() {
  std::vector<std::string> out;
  for (char c = 'a'; c <= 'k'; ++c) out.emplace_back(1, c);
  for (const char* s : {"ab", "ac", "abc", "abd", "abcd", "ef", "efg", "efgh", "hij", "hik", "ijk"}) out.emplace_back(s);
  return out;
}

void TagSpec::validate() const {
  if (tag_count == 0 || tag_count > 26) throw InvalidInput("tag count must be in 1..26");
  if (tag_size == 0 || placements == 0) throw InvalidInput("tag size and placements must be positive");
  if (tag_size > file_size) throw InvalidInput("tags must fit in a file");
  if (assignments.empty()) throw InvalidInput("no tag assignments");
  std::size_t max_tags = 0;
  std::set<std::string> seen;
  for (const auto& a : assignments) {
    if (a.empty()) throw InvalidInput("empty tag assignment");
    std::set<char> letters(a.begin(), a.end());
    if (letters.size() != a.size()) throw InvalidInput("tag assignment '" + a + "' repeats a tag");
    for (char c : a)
      if (c < 'a' || static_cast<std::size_t>(c - 'a') >= tag_count)
        throw InvalidInput("tag assignment '" + a + "' names an unknown tag");
    if (!seen.insert(a).second) throw InvalidInput("duplicate tag assignment '" + a + "'");
    max_tags = std::max(max_tags, a.size());
  }
  if (placements * max_tags * tag_size > file_size / 2)
    throw InvalidInput("tag placements would cover more than half of a file");
}

namespace {

void fill_random(std::span<std::uint8_t> out, Rng& rng) {
  std::size_t i = 0;
  while (i < out.size()) {
    std::uint64_t word = rng.next();
    for (int b = 0; b < 8 && i < out.size(); ++b, word >>= 8) out[i++] = static_cast<std::uint8_t>(word);
  }
}

}  // namespace

TagCorpus gen_tag_corpus(const TagSpec& spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(derive_seed(seed, kTagStream));
  TagCorpus corpus;
  corpus.tags.resize(spec.tag_count, Bytes(spec.tag_size));
  for (auto& tag : corpus.tags) fill_random(tag, rng);
  for (const auto& assignment : spec.assignments) {
    Bytes file(spec.file_size);
    fill_random(file, rng);
    for (char c : assignment) {
      const Bytes& tag = corpus.tags[c - 'a'];
      for (std::size_t p = 0; p < spec.placements; ++p) {
        auto offset = rng.below(spec.file_size - spec.tag_size + 1);
        std::copy(tag.begin(), tag.end(), file.begin() + static_cast<std::ptrdiff_t>(offset));
      }
    }
    corpus.files.push_back({assignment, std::move(file)});
  }
  return corpus;
}

std::size_t shared_tag_count(std::string_view a, std::string_view b) {
  return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [&](char c) { return b.find(c) != std::string_view::npos; }));
}

}  // namespace ncdtree
