#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ncdtree/codec.hpp"

namespace ncdtree::cli {

struct FileDigest {
  std::string path;
  std::string sha256;
  std::uint64_t bytes = 0;
};

/// Everything needed to rerun a command: written as JSON next to each
/// artifact.
struct RunManifest {
  std::vector<std::string> command_line;
  std::optional<std::uint64_t> seed;
  std::optional<CodecSpec> codec;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
  std::string timestamp;  // UTC, ISO 8601
  std::string tool_version;

  std::string to_json() const;
};

FileDigest digest_file(const std::filesystem::path& path);

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

/// `artifact` with ".manifest.json" appended.
std::filesystem::path manifest_path_for(const std::filesystem::path& artifact);

}  // namespace ncdtree::cli
