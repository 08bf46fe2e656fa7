#include "ncdtree/document.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "ncdtree/errors.hpp"

namespace ncdtree {

namespace fs = std::filesystem;

void validate_label(std::string_view label) {
  if (label.empty()) throw InvalidInput("empty label");
  for (char ch : label) {
    if (std::isspace(static_cast<unsigned char>(ch)))
      throw InvalidInput("label '" + std::string(label) + "' contains whitespace");
  }
}

void validate_labels(std::span<const std::string> labels) {
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    validate_label(l);
    if (!seen.insert(l).second) throw InvalidInput("duplicate label '" + l + "'");
  }
}

void validate_documents(std::span<const Document> docs) {
  std::vector<std::string> labels;
  labels.reserve(docs.size());
  for (const auto& d : docs) labels.push_back(d.label);
  validate_labels(labels);
}

std::string label_from_path(const fs::path& path) {
  std::string label = path.filename().string();
  for (char& ch : label)
    if (std::isspace(static_cast<unsigned char>(ch))) ch = '_';
  return label;
}

std::vector<Document> load_documents(std::span<const fs::path> inputs) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (fs::is_directory(in, ec)) {
      std::vector<fs::path> entries;
      for (const auto& e : fs::directory_iterator(in)) {
        if (e.is_regular_file()) entries.push_back(e.path());
      }
      std::sort(entries.begin(), entries.end(),
                [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });
      files.insert(files.end(), entries.begin(), entries.end());
    } else {
      files.push_back(in);
    }
  }
  std::vector<Document> docs;
  docs.reserve(files.size());
  std::unordered_set<std::string> seen;
  for (const auto& f : files) {
    std::string label = label_from_path(f);
    if (label.empty()) throw InvalidInput("cannot derive a label from '" + f.string() + "'");
    if (!seen.insert(label).second)
      throw InvalidInput("duplicate label '" + label + "' derived from '" + f.string() + "'");
    docs.push_back({std::move(label), read_file(f)});
  }
  return docs;
}

}  // namespace ncdtree
