#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncdtree {

/// Labeled square matrix of pairwise distances, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// Zero-filled; labels are validated (nonempty, no whitespace, unique).
  explicit DistanceMatrix(std::vector<std::string> labels);
  DistanceMatrix(std::vector<std::string> labels, std::vector<double> entries);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * labels_.size() + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return entries_[i * labels_.size() + j]; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  /// Exact (bitwise) symmetry.
  bool is_symmetric() const noexcept;

  /// Free-form provenance: codec, numerator mode, options. Not part of the
  /// text format.
  std::map<std::string, std::string> metadata;

  friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
    return a.labels_ == b.labels_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<double> entries_;
};

/// Text format: first line n, then n lines "<label> v1 ... vn" with values at
/// 15 significant digits.
void write_matrix(std::ostream& os, const DistanceMatrix& m);
std::string to_text(const DistanceMatrix& m);

/// Parses the text format. Throws ParseError (with line number) on malformed
/// input, non-square data, non-finite values or duplicate labels.
DistanceMatrix read_matrix(std::istream& is);
DistanceMatrix parse_matrix(std::string_view text);

DistanceMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const DistanceMatrix& m);

}  // namespace ncdtree
