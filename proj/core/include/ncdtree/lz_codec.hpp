#pragma once

#include <cstdint>

#include "ncdtree/codec.hpp"

namespace ncdtree {

/// Lempel-Ziv family stream codec: raw LZMA2 through liblzma.
///
/// The 8 MiB dictionary covers every concatenation this toolkit builds, so
/// a repeat of an earlier input is always within reach.
class LzCodec final : public LosslessCodec {
 public:
  explicit LzCodec(std::uint32_t preset = 6);

  Bytes compress(ByteView data) const override;
  Bytes decompress(ByteView packed) const override;
  std::uint64_t overhead_bound(std::uint64_t n) const override;

 private:
  std::uint32_t preset_;
};

}  // namespace ncdtree
