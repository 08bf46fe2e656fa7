#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ncdtree/bytes.hpp"

namespace ncdtree {

/// A labeled byte string: the thing being clustered.
struct Document {
  std::string label;
  Bytes content;
};

/// Throws InvalidInput unless `label` is nonempty and has no whitespace.
void validate_label(std::string_view label);

/// Throws InvalidInput on a bad or repeated label.
void validate_labels(std::span<const std::string> labels);
void validate_documents(std::span<const Document> docs);

/// File basename with whitespace replaced by '_'.
std::string label_from_path(const std::filesystem::path& path);

/// Loads documents from files and/or directories. A directory contributes its
/// regular files in lexicographic order. Labels come from basenames; a
/// collision is an InvalidInput error, an unreadable file an IoError.
std::vector<Document> load_documents(std::span<const std::filesystem::path> inputs);

}  // namespace ncdtree
