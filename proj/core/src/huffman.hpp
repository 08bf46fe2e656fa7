#pragma once

// Canonical Huffman coding and MSB-first bit I/O used by the block-sorting codec.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ncdtree/bytes.hpp"

namespace ncdtree::huffman {

class BitWriter {
 public:
  void put(std::uint32_t bits, unsigned count);
  /// Flushes a partial byte (zero padded) and returns the buffer.
  Bytes finish();
  std::size_t bit_count() const noexcept { return bytes_.size() * 8 + fill_; }

 private:
  Bytes bytes_;
  std::uint32_t acc_ = 0;
  unsigned fill_ = 0;
};

class BitReader {
 public:
  explicit BitReader(ByteView data) : data_(data) {}
  /// Throws CodecFailure past the end of the data.
  std::uint32_t get(unsigned count);
  unsigned bit();

 private:
  ByteView data_;
  std::size_t pos_ = 0;  // in bits
};

/// Length-limited code lengths; 0 marks an unused symbol. A lone used symbol
/// gets length 1.
std::vector<std::uint8_t> code_lengths(std::span<const std::uint64_t> freq, unsigned max_len);

/// Canonical codes for the given lengths (shorter codes first, ties by symbol).
std::vector<std::uint32_t> canonical_codes(std::span<const std::uint8_t> lengths);

class Decoder {
 public:
  /// Throws CodecFailure if the lengths do not form a prefix code.
  explicit Decoder(std::span<const std::uint8_t> lengths);
  std::uint32_t decode(BitReader& in) const;

 private:
  unsigned max_len_ = 0;
  std::vector<std::uint32_t> first_code_;   // per length
  std::vector<std::uint32_t> first_index_;  // per length, into symbols_
  std::vector<std::uint32_t> count_;        // per length
  std::vector<std::uint32_t> symbols_;      // sorted by (length, symbol)
};

}  // namespace ncdtree::huffman
