#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <string>

#include "ncdtree/bytes.hpp"

namespace ncdtree {

/// SHA-256 content digest.
using Digest = std::array<std::uint8_t, 32>;

Digest sha256(ByteView data);

/// Digest of x ∥ y without materialising the concatenation.
Digest sha256(ByteView x, ByteView y);

std::string to_hex(const Digest& d);

struct DigestHash {
  std::size_t operator()(const Digest& d) const noexcept {
    std::size_t h;
    std::memcpy(&h, d.data(), sizeof h);
    return h;
  }
};

}  // namespace ncdtree
