#pragma once

#include <string>
#include <vector>

#include "ncdtree/codec.hpp"

namespace ncdtree {

/// Runs an external compressor: input goes to its stdin, C(x) is the number
/// of bytes it writes to stdout. The command must not touch files.
class ExternalCommandCodec final : public Codec {
 public:
  /// Resolves argv[0] against PATH; throws CodecUnavailable if not found.
  explicit ExternalCommandCodec(std::vector<std::string> argv);

  CodeLength measure(ByteView data) const override;
  std::uint64_t overhead_bound(std::uint64_t) const override;

  const std::string& executable() const noexcept { return executable_; }

 private:
  std::string executable_;
};

}  // namespace ncdtree
