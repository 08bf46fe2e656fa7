#include "ncdtree/compressor.hpp"

#include <mutex>

namespace ncdtree {

std::optional<CodeLength> CodeLengthCache::find(const Digest& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CodeLengthCache::insert(const Digest& key, CodeLength value) {
  std::unique_lock lock(mutex_);
  entries_.emplace(key, value);
}

std::size_t CodeLengthCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

Compressor::Compressor(std::shared_ptr<const Codec> codec, bool use_cache)
    : codec_(std::move(codec)), cache_(use_cache ? std::make_unique<CodeLengthCache>() : nullptr) {}

Compressor::Compressor(const CodecSpec& spec, bool use_cache) : Compressor(make_codec(spec), use_cache) {}

CodeLength Compressor::code_length(ByteView data) const {
  if (!cache_) return codec_->measure(data);
  Digest key = sha256(data);
  if (auto hit = cache_->find(key)) return *hit;
  CodeLength c = codec_->measure(data);
  cache_->insert(key, c);
  return c;
}

CodeLength Compressor::concat_code_length(ByteView x, ByteView y) const {
  if (y.empty()) return code_length(x);
  if (x.empty()) return code_length(y);
  if (cache_) {
    if (auto hit = cache_->find(sha256(x, y))) return *hit;
  }
  Bytes xy = concat(x, y);
  return code_length(xy);
}

}  // namespace ncdtree
