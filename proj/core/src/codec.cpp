#include "ncdtree/codec.hpp"

#include <cctype>

#include "ncdtree/blocksort_codec.hpp"
#include "ncdtree/errors.hpp"
#include "ncdtree/external_codec.hpp"
#include "ncdtree/lz_codec.hpp"

namespace ncdtree {

std::string_view to_string(CodecKind kind) {
  switch (kind) {
    case CodecKind::BuiltinLz: return "builtin-lz";
    case CodecKind::BuiltinBlockSort: return "builtin-blocksort";
    case CodecKind::Identity: return "identity";
    case CodecKind::ExternalCommand: return "external-command";
  }
  return "unknown";
}

CodecSpec CodecSpec::builtin(std::string_view name) {
  if (name == "lz") return {"lz", CodecKind::BuiltinLz, {}};
  if (name == "blocksort") return {"blocksort", CodecKind::BuiltinBlockSort, {}};
  if (name == "identity") return {"identity", CodecKind::Identity, {}};
  throw InvalidInput("unknown builtin compressor '" + std::string(name) +
                     "' (expected lz, blocksort or identity)");
}

CodecSpec CodecSpec::external(std::vector<std::string> argv) {
  if (argv.empty()) throw InvalidInput("external compressor command is empty");
  std::string name = "cmd:";
  for (std::size_t i = 0; i < argv.size(); ++i) {
    if (i) name += ' ';
    name += argv[i];
  }
  return {std::move(name), CodecKind::ExternalCommand, std::move(argv)};
}

IdentityCodec::IdentityCodec() : LosslessCodec(CodecSpec::builtin("identity")) {}

std::shared_ptr<const Codec> make_codec(const CodecSpec& spec) {
  switch (spec.kind) {
    case CodecKind::BuiltinLz: return std::make_shared<LzCodec>();
    case CodecKind::BuiltinBlockSort: return std::make_shared<BlockSortCodec>();
    case CodecKind::Identity: return std::make_shared<IdentityCodec>();
    case CodecKind::ExternalCommand: return std::make_shared<ExternalCommandCodec>(spec.command);
  }
  throw InvalidInput("unsupported codec kind");
}

std::vector<std::string> split_command(std::string_view line) {
  std::vector<std::string> argv;
  std::string word;
  bool in_word = false;
  char quote = 0;
  for (char ch : line) {
    if (quote) {
      if (ch == quote) {
        quote = 0;
      } else {
        word += ch;
      }
    } else if (ch == '\'' || ch == '"') {
      quote = ch;
      in_word = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (in_word) argv.push_back(std::move(word));
      word.clear();
      in_word = false;
    } else {
      word += ch;
      in_word = true;
    }
  }
  if (quote) throw InvalidInput("unterminated quote in command '" + std::string(line) + "'");
  if (in_word) argv.push_back(std::move(word));
  return argv;
}

}  // namespace ncdtree
