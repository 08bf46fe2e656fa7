#include "ncdtree/lz_codec.hpp"

#include <lzma.h>

#include <algorithm>
#include <bit>
#include <string>

#include "ncdtree/errors.hpp"

namespace ncdtree {

namespace {

// The dictionary only has to cover the input; sizing it to the input keeps
// the match-finder setup cheap for the many small inputs a matrix needs.
lzma_options_lzma options_for(std::uint32_t preset, std::size_t n) {
  lzma_options_lzma opt{};
  if (lzma_lzma_preset(&opt, preset)) throw InvalidInput("invalid LZMA preset " + std::to_string(preset));
  std::uint64_t dict = std::bit_ceil(std::max<std::uint64_t>(n, LZMA_DICT_SIZE_MIN));
  opt.dict_size = static_cast<std::uint32_t>(std::min<std::uint64_t>(dict, opt.dict_size));
  return opt;
}

std::string lzma_error(lzma_ret r) { return "liblzma error code " + std::to_string(static_cast<int>(r)); }

}  // namespace

LzCodec::LzCodec(std::uint32_t preset) : LosslessCodec(CodecSpec::builtin("lz")), preset_(preset) {
  lzma_options_lzma probe{};
  if (lzma_lzma_preset(&probe, preset_)) throw InvalidInput("invalid LZMA preset " + std::to_string(preset_));
}

Bytes LzCodec::compress(ByteView data) const {
  auto opt = options_for(preset_, data.size());
  lzma_filter filters[] = {{LZMA_FILTER_LZMA2, &opt}, {LZMA_VLI_UNKNOWN, nullptr}};
  Bytes out(lzma_block_buffer_bound(data.size()));
  std::size_t out_pos = 0;
  lzma_ret r = lzma_raw_buffer_encode(filters, nullptr, data.data(), data.size(), out.data(), &out_pos,
                                      out.size());
  if (r != LZMA_OK) throw CodecFailure("lz: compression failed: " + lzma_error(r));
  out.resize(out_pos);
  return out;
}

Bytes LzCodec::decompress(ByteView packed) const {
  // Raw streams do not record the dictionary size; decode with the largest
  // one the encoder can choose.
  lzma_options_lzma opt{};
  lzma_lzma_preset(&opt, preset_);
  lzma_filter filters[] = {{LZMA_FILTER_LZMA2, &opt}, {LZMA_VLI_UNKNOWN, nullptr}};

  lzma_stream strm = LZMA_STREAM_INIT;
  lzma_ret r = lzma_raw_decoder(&strm, filters);
  if (r != LZMA_OK) throw CodecFailure("lz: decoder setup failed: " + lzma_error(r));

  Bytes out(std::max<std::size_t>(packed.size() * 4, 4096));
  strm.next_in = packed.data();
  strm.avail_in = packed.size();
  strm.next_out = out.data();
  strm.avail_out = out.size();
  for (;;) {
    r = lzma_code(&strm, LZMA_FINISH);
    if (r == LZMA_STREAM_END) break;
    if (r == LZMA_OK && strm.avail_out == 0) {
      std::size_t used = out.size();
      out.resize(used * 2);
      strm.next_out = out.data() + used;
      strm.avail_out = out.size() - used;
      continue;
    }
    lzma_end(&strm);
    throw CodecFailure("lz: corrupt input: " + lzma_error(r));
  }
  out.resize(strm.total_out);
  lzma_end(&strm);
  return out;
}

std::uint64_t LzCodec::overhead_bound(std::uint64_t n) const {
  // Incompressible data falls back to stored LZMA2 chunks: 3 header bytes per
  // 64 KiB chunk plus the end marker.
  return 3 * (n / 65536 + 1) + 16;
}

}  // namespace ncdtree
