#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ncdtree/bytes.hpp"

namespace ncdtree {

enum class CodecKind { BuiltinLz, BuiltinBlockSort, Identity, ExternalCommand };

std::string_view to_string(CodecKind kind);

/// Which compressor to use. Value type; `make_codec` turns it into a runnable codec.
struct CodecSpec {
  std::string name;
  CodecKind kind = CodecKind::Identity;
  std::vector<std::string> command;  // argv, external codecs only

  /// "lz", "blocksort" or "identity". Throws InvalidInput on anything else.
  static CodecSpec builtin(std::string_view name);
  static CodecSpec external(std::vector<std::string> argv);
};

/// Compressed size in bytes.
struct CodeLength {
  std::uint64_t bytes = 0;
  auto operator<=>(const CodeLength&) const = default;
};

/// A code-length function C(.) over byte strings.
///
/// Implementations must be deterministic and safe to call concurrently from
/// several threads on the same instance.
class Codec {
 public:
  explicit Codec(CodecSpec spec) : spec_(std::move(spec)) {}
  virtual ~Codec() = default;
  Codec(const Codec&) = delete;
  Codec& operator=(const Codec&) = delete;

  const CodecSpec& spec() const noexcept { return spec_; }
  const std::string& name() const noexcept { return spec_.name; }

  virtual CodeLength measure(ByteView data) const = 0;

  /// Upper bound on C(x) - |x| for inputs of length n (header and framing).
  /// Unbounded for external commands.
  virtual std::uint64_t overhead_bound(std::uint64_t n) const = 0;

 private:
  CodecSpec spec_;
};

/// A codec that can also reproduce its input from its own output.
class LosslessCodec : public Codec {
 public:
  using Codec::Codec;

  virtual Bytes compress(ByteView data) const = 0;
  virtual Bytes decompress(ByteView packed) const = 0;

  CodeLength measure(ByteView data) const override { return {compress(data).size()}; }
};

/// C(x) = |x|. No compression at all; used for analytic checks.
class IdentityCodec final : public LosslessCodec {
 public:
  IdentityCodec();
  Bytes compress(ByteView data) const override { return {data.begin(), data.end()}; }
  Bytes decompress(ByteView packed) const override { return {packed.begin(), packed.end()}; }
  CodeLength measure(ByteView data) const override { return {data.size()}; }
  std::uint64_t overhead_bound(std::uint64_t) const override { return 0; }
};

std::shared_ptr<const Codec> make_codec(const CodecSpec& spec);

/// Splits a command line into argv. Whitespace separates words; single and
/// double quotes group. No variable expansion.
std::vector<std::string> split_command(std::string_view command_line);

}  // namespace ncdtree
