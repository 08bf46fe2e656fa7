#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "ncdtree/codec.hpp"
#include "ncdtree/digest.hpp"

namespace ncdtree {

/// Thread-safe map from content digest to code length.
class CodeLengthCache {
 public:
  std::optional<CodeLength> find(const Digest& key) const;
  void insert(const Digest& key, CodeLength value);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Digest, CodeLength, DigestHash> entries_;
};

/// A codec plus a per-session cache of code lengths keyed by SHA-256 of the
/// input. Safe to share across worker threads.
class Compressor {
 public:
  explicit Compressor(std::shared_ptr<const Codec> codec, bool use_cache = true);
  explicit Compressor(const CodecSpec& spec, bool use_cache = true);

  const Codec& codec() const noexcept { return *codec_; }
  std::shared_ptr<const Codec> codec_ptr() const noexcept { return codec_; }

  CodeLength code_length(ByteView data) const;

  /// C(x ∥ y), raw concatenation with no separator.
  CodeLength concat_code_length(ByteView x, ByteView y) const;

  std::size_t cached_entries() const { return cache_ ? cache_->size() : 0; }

 private:
  std::shared_ptr<const Codec> codec_;
  std::unique_ptr<CodeLengthCache> cache_;
};

}  // namespace ncdtree
