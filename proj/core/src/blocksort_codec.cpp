#include "ncdtree/blocksort_codec.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

#include "huffman.hpp"
#include "ncdtree/errors.hpp"

namespace ncdtree {

namespace {

constexpr std::uint8_t kFormatTag = 0xB5;
constexpr std::uint8_t kStoredLiterals = 0x01;

constexpr std::size_t kHashWindow = 32;
constexpr unsigned kChainDepth = 16;

constexpr std::uint32_t kRunA = 0;
constexpr std::uint32_t kRunB = 1;
constexpr std::size_t kAlphabet = 257;  // RUNA, RUNB, MTF positions 1..255
constexpr unsigned kMaxCodeLength = 20;
constexpr unsigned kLengthBits = 5;

void put_varint(Bytes& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(v | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(v));
}

std::uint64_t get_varint(ByteView in, std::size_t& pos) {
  std::uint64_t v = 0;
  for (unsigned shift = 0; shift < 64; shift += 7) {
    if (pos >= in.size()) throw CodecFailure("blocksort: truncated header");
    std::uint8_t b = in[pos++];
    v |= std::uint64_t{b & 0x7Fu} << shift;
    if (!(b & 0x80)) return v;
  }
  throw CodecFailure("blocksort: malformed varint");
}

// ---------------------------------------------------------------------------
// Stage 1: long-range matches.

struct Match {
  std::uint64_t literal_run;  // literals preceding the match
  std::uint64_t distance;
  std::uint64_t length;
};

struct Parse {
  std::vector<Match> matches;
  Bytes literals;
};

Parse find_long_matches(ByteView data) {
  Parse parse;
  const std::size_t n = data.size();
  if (n < BlockSortCodec::kMinMatch) {
    parse.literals.assign(data.begin(), data.end());
    return parse;
  }

  // Polynomial rolling hash of every kHashWindow-byte window.
  constexpr std::uint64_t kBase = 0x100000001B3ull;
  std::uint64_t top = 1;
  for (std::size_t k = 1; k < kHashWindow; ++k) top *= kBase;
  const std::size_t windows = n - kHashWindow + 1;
  std::vector<std::uint64_t> hash(windows);
  std::uint64_t h = 0;
  for (std::size_t k = 0; k < kHashWindow; ++k) h = h * kBase + data[k];
  hash[0] = h;
  for (std::size_t i = 1; i < windows; ++i) {
    h = (h - data[i - 1] * top) * kBase + data[i + kHashWindow - 1];
    hash[i] = h;
  }

  const unsigned bits = std::clamp(static_cast<unsigned>(std::bit_width(n)), 10u, 22u);
  auto bucket = [&](std::size_t pos) { return (hash[pos] * 0x9E3779B97F4A7C15ull) >> (64 - bits); };
  std::vector<std::int32_t> head(std::size_t{1} << bits, -1);
  std::vector<std::int32_t> prev(windows, -1);
  std::size_t inserted = 0;
  auto insert_below = [&](std::size_t limit) {
    for (limit = std::min(limit, windows); inserted < limit; ++inserted) {
      auto b = bucket(inserted);
      prev[inserted] = head[b];
      head[b] = static_cast<std::int32_t>(inserted);
    }
  };

  std::size_t literal_start = 0;
  std::size_t i = 0;
  while (i < windows) {
    insert_below(i);
    std::size_t best_len = 0, best_src = 0;
    unsigned depth = 0;
    for (std::int32_t c = head[bucket(i)]; c >= 0 && depth < kChainDepth; c = prev[c], ++depth) {
      auto src = static_cast<std::size_t>(c);
      if (hash[src] != hash[i]) continue;
      std::size_t len = 0;
      while (i + len < n && data[src + len] == data[i + len]) ++len;
      if (len > best_len) {
        best_len = len;
        best_src = src;
      }
    }
    if (best_len < kHashWindow) {
      ++i;
      continue;
    }
    // Grow the match backwards over pending literals.
    std::size_t start = i, src = best_src;
    while (start > literal_start && src > 0 && data[src - 1] == data[start - 1]) {
      --start;
      --src;
      ++best_len;
    }
    if (best_len < BlockSortCodec::kMinMatch) {
      ++i;
      continue;
    }
    parse.literals.insert(parse.literals.end(), data.begin() + literal_start, data.begin() + start);
    parse.matches.push_back({start - literal_start, start - src, best_len});
    i = start + best_len;
    literal_start = i;
  }
  parse.literals.insert(parse.literals.end(), data.begin() + literal_start, data.end());
  return parse;
}

// ---------------------------------------------------------------------------
// Stages 3 and 4: move-to-front plus zero-run coding.

void put_zero_run(std::vector<std::uint16_t>& out, std::uint64_t run) {
  while (run > 0) {
    --run;
    out.push_back(static_cast<std::uint16_t>((run & 1) ? kRunB : kRunA));
    run >>= 1;
  }
}

std::vector<std::uint16_t> mtf_encode(ByteView last_column) {
  std::array<std::uint8_t, 256> order;
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint16_t> out;
  out.reserve(last_column.size());
  std::uint64_t run = 0;
  for (std::uint8_t b : last_column) {
    if (order[0] == b) {
      ++run;
      continue;
    }
    put_zero_run(out, run);
    run = 0;
    std::size_t pos = 1;
    while (order[pos] != b) ++pos;
    std::move_backward(order.begin(), order.begin() + pos, order.begin() + pos + 1);
    order[0] = b;
    out.push_back(static_cast<std::uint16_t>(pos + 1));
  }
  put_zero_run(out, run);
  return out;
}

Bytes mtf_decode(const std::vector<std::uint32_t>& symbols, std::size_t expected) {
  std::array<std::uint8_t, 256> order;
  std::iota(order.begin(), order.end(), 0);
  Bytes out;
  out.reserve(expected);
  std::uint64_t run = 0, weight = 1;
  auto flush = [&] {
    if (run > expected - out.size()) throw CodecFailure("blocksort: zero run overflows block");
    out.insert(out.end(), run, order[0]);
    run = 0;
    weight = 1;
  };
  for (std::uint32_t s : symbols) {
    if (s == kRunA || s == kRunB) {
      if (weight > (std::uint64_t{1} << 40)) throw CodecFailure("blocksort: zero run too long");
      run += (s == kRunA ? 1 : 2) * weight;
      weight <<= 1;
      continue;
    }
    flush();
    std::size_t pos = s - 1;
    if (pos == 0 || pos > 255) throw CodecFailure("blocksort: invalid MTF symbol");
    std::uint8_t b = order[pos];
    std::move_backward(order.begin(), order.begin() + pos, order.begin() + pos + 1);
    order[0] = b;
    out.push_back(b);
  }
  flush();
  if (out.size() != expected) throw CodecFailure("blocksort: literal count mismatch");
  return out;
}

// ---------------------------------------------------------------------------
// Stage 5: entropy coding of the symbol stream.

Bytes entropy_encode(const std::vector<std::uint16_t>& symbols) {
  std::vector<std::uint64_t> freq(kAlphabet, 0);
  for (auto s : symbols) ++freq[s];
  auto lengths = huffman::code_lengths(freq, kMaxCodeLength);
  auto codes = huffman::canonical_codes(lengths);
  huffman::BitWriter w;
  for (auto l : lengths) w.put(l, kLengthBits);
  for (auto s : symbols) w.put(codes[s], lengths[s]);
  return w.finish();
}

std::vector<std::uint32_t> entropy_decode(ByteView payload, std::size_t count) {
  huffman::BitReader r(payload);
  std::vector<std::uint8_t> lengths(kAlphabet);
  for (auto& l : lengths) {
    l = static_cast<std::uint8_t>(r.get(kLengthBits));
    if (l > kMaxCodeLength) throw CodecFailure("blocksort: code length out of range");
  }
  huffman::Decoder dec(lengths);
  std::vector<std::uint32_t> symbols(count);
  for (auto& s : symbols) s = dec.decode(r);
  return symbols;
}

}  // namespace

// ---------------------------------------------------------------------------
// Stage 2: Burrows-Wheeler transform.

namespace bwt {

Bytes forward(ByteView data, std::uint32_t& primary) {
  const std::size_t n = data.size();
  primary = 0;
  if (n == 0) return {};

  // Prefix doubling over cyclic shifts with counting sorts.
  std::vector<std::uint32_t> p(n), c(n), pn(n), cn(n);
  std::vector<std::uint32_t> cnt(std::max<std::size_t>(256, n) + 1, 0);
  for (auto b : data) ++cnt[b];
  for (std::size_t k = 1; k < 256; ++k) cnt[k] += cnt[k - 1];
  for (std::size_t i = n; i-- > 0;) p[--cnt[data[i]]] = static_cast<std::uint32_t>(i);
  c[p[0]] = 0;
  std::size_t classes = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (data[p[i]] != data[p[i - 1]]) ++classes;
    c[p[i]] = static_cast<std::uint32_t>(classes - 1);
  }

  for (std::size_t h = 1; h < n && classes < n; h <<= 1) {
    for (std::size_t i = 0; i < n; ++i) pn[i] = static_cast<std::uint32_t>((p[i] + n - h % n) % n);
    std::fill(cnt.begin(), cnt.begin() + classes, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[c[pn[i]]];
    for (std::size_t k = 1; k < classes; ++k) cnt[k] += cnt[k - 1];
    for (std::size_t i = n; i-- > 0;) p[--cnt[c[pn[i]]]] = pn[i];
    cn[p[0]] = 0;
    classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      auto cur_second = c[(p[i] + h) % n];
      auto prev_second = c[(p[i - 1] + h) % n];
      if (c[p[i]] != c[p[i - 1]] || cur_second != prev_second) ++classes;
      cn[p[i]] = static_cast<std::uint32_t>(classes - 1);
    }
    c.swap(cn);
  }
  // Periodic input: identical rotations must stay in index order for the
  // inverse to walk back to rotation 0.
  if (classes < n)
    std::sort(p.begin(), p.end(), [&](std::uint32_t a, std::uint32_t b) { return c[a] != c[b] ? c[a] < c[b] : a < b; });

  Bytes last(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] == 0) primary = static_cast<std::uint32_t>(i);
    last[i] = data[(p[i] + n - 1) % n];
  }
  return last;
}

Bytes inverse(ByteView last, std::uint32_t primary) {
  const std::size_t n = last.size();
  if (n == 0) return {};
  if (primary >= n) throw CodecFailure("blocksort: BWT primary index out of range");
  std::array<std::size_t, 257> start{};
  for (auto b : last) ++start[b + 1];
  for (std::size_t k = 1; k < 257; ++k) start[k] += start[k - 1];
  std::array<std::size_t, 256> seen{};
  std::vector<std::uint32_t> lf(n);
  for (std::size_t i = 0; i < n; ++i) lf[i] = static_cast<std::uint32_t>(start[last[i]] + seen[last[i]]++);
  Bytes out(n);
  std::size_t row = primary;
  for (std::size_t k = n; k-- > 0;) {
    out[k] = last[row];
    row = lf[row];
  }
  return out;
}

}  // namespace bwt

// ---------------------------------------------------------------------------

BlockSortCodec::BlockSortCodec(std::size_t max_block)
    : LosslessCodec(CodecSpec::builtin("blocksort")), max_block_(max_block) {
  if (max_block_ == 0) throw InvalidInput("blocksort: block size must be positive");
}

Bytes BlockSortCodec::compress(ByteView data) const {
  if (data.size() > max_block_) {
    throw InvalidInput("blocksort: input of " + std::to_string(data.size()) + " bytes exceeds the " +
                       std::to_string(max_block_) + "-byte block size");
  }
  Parse parse = find_long_matches(data);

  Bytes payload;
  std::uint8_t flags = 0;
  std::uint32_t primary = 0;
  std::size_t symbol_count = 0;
  if (!parse.literals.empty()) {
    Bytes last = bwt::forward(parse.literals, primary);
    auto symbols = mtf_encode(last);
    symbol_count = symbols.size();
    payload = entropy_encode(symbols);
    if (payload.size() >= parse.literals.size()) {
      flags |= kStoredLiterals;
      payload = std::move(parse.literals);
    }
  }

  Bytes out;
  out.reserve(payload.size() + 16 + parse.matches.size() * 8);
  out.push_back(kFormatTag);
  out.push_back(flags);
  put_varint(out, data.size());
  put_varint(out, parse.matches.size());
  for (const auto& m : parse.matches) {
    put_varint(out, m.literal_run);
    put_varint(out, m.distance);
    put_varint(out, m.length - kMinMatch);
  }
  if (!(flags & kStoredLiterals) && symbol_count > 0) {
    put_varint(out, primary);
    put_varint(out, symbol_count);
  }
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Bytes BlockSortCodec::decompress(ByteView packed) const {
  std::size_t pos = 0;
  if (packed.size() < 2 || packed[0] != kFormatTag) throw CodecFailure("blocksort: bad format tag");
  std::uint8_t flags = packed[1];
  pos = 2;
  std::uint64_t total = get_varint(packed, pos);
  if (total > max_block_) throw CodecFailure("blocksort: declared size exceeds block size");
  std::uint64_t match_count = get_varint(packed, pos);
  if (match_count > total / kMinMatch) throw CodecFailure("blocksort: too many matches");
  std::vector<Match> matches(match_count);
  std::uint64_t literal_total = total;
  for (auto& m : matches) {
    m.literal_run = get_varint(packed, pos);
    m.distance = get_varint(packed, pos);
    m.length = get_varint(packed, pos) + kMinMatch;
    if (m.length > literal_total) throw CodecFailure("blocksort: match longer than block");
    literal_total -= m.length;
  }

  Bytes literals;
  if (literal_total > 0) {
    if (flags & kStoredLiterals) {
      if (packed.size() - pos != literal_total) throw CodecFailure("blocksort: stored literal size mismatch");
      literals.assign(packed.begin() + static_cast<std::ptrdiff_t>(pos), packed.end());
    } else {
      auto primary = get_varint(packed, pos);
      auto symbol_count = get_varint(packed, pos);
      if (symbol_count > literal_total) throw CodecFailure("blocksort: symbol count out of range");
      auto symbols = entropy_decode(packed.subspan(pos), symbol_count);
      Bytes last = mtf_decode(symbols, literal_total);
      if (primary >= last.size()) throw CodecFailure("blocksort: BWT primary index out of range");
      literals = bwt::inverse(last, static_cast<std::uint32_t>(primary));
    }
  }

  Bytes out;
  out.reserve(total);
  std::size_t lit = 0;
  for (const auto& m : matches) {
    if (m.literal_run > literals.size() - lit) throw CodecFailure("blocksort: literal run overflows");
    out.insert(out.end(), literals.begin() + lit, literals.begin() + lit + m.literal_run);
    lit += m.literal_run;
    if (m.distance == 0 || m.distance > out.size()) throw CodecFailure("blocksort: bad match distance");
    std::size_t src = out.size() - m.distance;
    for (std::uint64_t k = 0; k < m.length; ++k) out.push_back(out[src + k]);
  }
  out.insert(out.end(), literals.begin() + lit, literals.end());
  if (out.size() != total) throw CodecFailure("blocksort: decoded size mismatch");
  return out;
}

std::uint64_t BlockSortCodec::overhead_bound(std::uint64_t) const {
  // tag + flags + size varint + match count varint + literal fallback; every
  // match token is shorter than the >= 64 bytes it replaces.
  return 32;
}

}  // namespace ncdtree
