#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncdtree {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline Bytes to_bytes(std::string_view s) {
  auto v = as_bytes(s);
  return {v.begin(), v.end()};
}

Bytes concat(ByteView x, ByteView y);

/// Reads a whole file. Throws IoError if it cannot be opened or read.
Bytes read_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, ByteView data);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ncdtree
