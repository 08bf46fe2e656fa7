#include "ncdtree/block_frequency.hpp"

#include <array>
#include <cmath>

#include "ncdtree/errors.hpp"

namespace ncdtree {

namespace {

constexpr std::size_t kMaxDimension = std::size_t{1} << 26;

std::array<int, 256> digit_table(const std::string& alphabet) {
  std::array<int, 256> digit;
  digit.fill(-1);
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    auto b = static_cast<unsigned char>(alphabet[i]);
    if (digit[b] >= 0) throw InvalidInput("alphabet repeats byte " + std::to_string(b));
    digit[b] = static_cast<int>(i);
  }
  return digit;
}

}  // namespace

std::size_t block_frequency_dimension(const BlockFrequencyOptions& options) {
  if (options.alphabet.empty()) throw InvalidInput("empty alphabet");
  if (options.block_length == 0) throw InvalidInput("block length must be positive");
  std::size_t dim = 1;
  for (std::size_t k = 0; k < options.block_length; ++k) {
    if (dim > kMaxDimension / options.alphabet.size())
      throw InvalidInput("block-frequency vectors of dimension " + std::to_string(options.alphabet.size()) + "^" +
                         std::to_string(options.block_length) + " are too large");
    dim *= options.alphabet.size();
  }
  return dim;
}

std::vector<double> block_frequency_vector(const Document& doc, const BlockFrequencyOptions& options) {
  const std::size_t dim = block_frequency_dimension(options);
  const auto digit = digit_table(options.alphabet);
  const std::size_t base = options.alphabet.size();
  const std::size_t k = options.block_length;
  std::vector<double> counts(dim, 0.0);
  std::size_t index = 0;
  for (std::size_t pos = 0; pos < doc.content.size(); ++pos) {
    int d = digit[doc.content[pos]];
    if (d < 0)
      throw InvalidInput("document '" + doc.label + "': byte " + std::to_string(doc.content[pos]) +
                         " at offset " + std::to_string(pos) + " is outside the alphabet");
    index = (index * base + static_cast<std::size_t>(d)) % dim;
    if (pos + 1 >= k) counts[index] += 1.0;
  }
  return counts;
}

DistanceMatrix block_frequency_distance(std::span<const Document> docs, const BlockFrequencyOptions& options) {
  validate_documents(docs);
  std::vector<std::vector<double>> vectors;
  vectors.reserve(docs.size());
  for (const auto& d : docs) vectors.push_back(block_frequency_vector(d, options));

  std::vector<std::string> labels;
  for (const auto& d : docs) labels.push_back(d.label);
  DistanceMatrix m(std::move(labels));
  m.metadata["distance"] = "block-frequency-l2";
  m.metadata["block_length"] = std::to_string(options.block_length);
  m.metadata["alphabet"] = options.alphabet;

  double largest = 0.0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    for (std::size_t j = i + 1; j < docs.size(); ++j) {
      double sum = 0.0;
      for (std::size_t t = 0; t < vectors[i].size(); ++t) {
        const double diff = vectors[i][t] - vectors[j][t];
        sum += diff * diff;
      }
      const double dist = std::sqrt(sum);
      m(i, j) = dist;
      m(j, i) = dist;
      largest = std::max(largest, dist);
    }
  }
  if (options.rescale && largest > 0) {
    for (std::size_t i = 0; i < docs.size(); ++i)
      for (std::size_t j = 0; j < docs.size(); ++j) m(i, j) = i == j ? 0.0 : m(i, j) / largest;
  }
  return m;
}

}  // namespace ncdtree
