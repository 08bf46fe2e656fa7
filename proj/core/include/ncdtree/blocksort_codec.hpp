#pragma once

#include <cstddef>
#include <cstdint>

#include "ncdtree/codec.hpp"

namespace ncdtree {

/// Block-sorting codec.
///
/// Pipeline, all on a single block:
///   1. long-range match removal (repeats of >= kMinMatch bytes anywhere
///      earlier in the block become back-references),
///   2. Burrows-Wheeler transform of the remaining literals (cyclic rotations),
///   3. move-to-front,
///   4. zero-run coding (bijective base 2, RUNA/RUNB),
///   5. one canonical Huffman table.
/// If stage 5 would not beat storing the literals, they are stored verbatim.
///
/// The whole input is one block. Inputs larger than `max_block` are rejected
/// with InvalidInput rather than split, since splitting breaks C(xx) ~ C(x).
class BlockSortCodec final : public LosslessCodec {
 public:
  static constexpr std::size_t kDefaultMaxBlock = 900 * 1024;
  static constexpr std::size_t kMinMatch = 64;

  explicit BlockSortCodec(std::size_t max_block = kDefaultMaxBlock);

  Bytes compress(ByteView data) const override;
  Bytes decompress(ByteView packed) const override;
  std::uint64_t overhead_bound(std::uint64_t n) const override;

  std::size_t max_block() const noexcept { return max_block_; }

 private:
  std::size_t max_block_;
};

namespace bwt {

/// Burrows-Wheeler transform over cyclic rotations. Returns the last column;
/// `primary` receives the sorted position of rotation 0.
Bytes forward(ByteView data, std::uint32_t& primary);
Bytes inverse(ByteView last_column, std::uint32_t primary);

}  // namespace bwt

}  // namespace ncdtree
