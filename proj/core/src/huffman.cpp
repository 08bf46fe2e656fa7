#include "huffman.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>

#include "ncdtree/errors.hpp"

namespace ncdtree::huffman {

void BitWriter::put(std::uint32_t bits, unsigned count) {
  for (unsigned i = count; i-- > 0;) {
    acc_ = (acc_ << 1) | ((bits >> i) & 1u);
    if (++fill_ == 8) {
      bytes_.push_back(static_cast<std::uint8_t>(acc_));
      acc_ = 0;
      fill_ = 0;
    }
  }
}

Bytes BitWriter::finish() {
  if (fill_ > 0) {
    bytes_.push_back(static_cast<std::uint8_t>(acc_ << (8 - fill_)));
    acc_ = 0;
    fill_ = 0;
  }
  return std::move(bytes_);
}

unsigned BitReader::bit() {
  if (pos_ >= data_.size() * 8) throw CodecFailure("blocksort: bit stream truncated");
  unsigned b = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
  ++pos_;
  return b;
}

std::uint32_t BitReader::get(unsigned count) {
  std::uint32_t v = 0;
  for (unsigned i = 0; i < count; ++i) v = (v << 1) | bit();
  return v;
}

namespace {

// Plain Huffman tree depths with deterministic tie-breaking.
std::vector<unsigned> tree_depths(std::span<const std::uint64_t> freq) {
  using Item = std::tuple<std::uint64_t, std::uint32_t>;  // weight, node
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::vector<std::int64_t> parent;
  std::vector<std::uint32_t> leaf_node(freq.size(), UINT32_MAX);
  for (std::uint32_t s = 0; s < freq.size(); ++s) {
    if (freq[s] == 0) continue;
    leaf_node[s] = static_cast<std::uint32_t>(parent.size());
    heap.emplace(freq[s], leaf_node[s]);
    parent.push_back(-1);
  }
  while (heap.size() > 1) {
    auto [wa, a] = heap.top();
    heap.pop();
    auto [wb, b] = heap.top();
    heap.pop();
    auto node = static_cast<std::uint32_t>(parent.size());
    parent.push_back(-1);
    parent[a] = node;
    parent[b] = node;
    heap.emplace(wa + wb, node);
  }
  std::vector<unsigned> depth(freq.size(), 0);
  for (std::size_t s = 0; s < freq.size(); ++s) {
    if (leaf_node[s] == UINT32_MAX) continue;
    unsigned d = 0;
    for (auto n = static_cast<std::int64_t>(leaf_node[s]); parent[n] >= 0; n = parent[n]) ++d;
    depth[s] = d;
  }
  return depth;
}

}  // namespace

std::vector<std::uint8_t> code_lengths(std::span<const std::uint64_t> freq, unsigned max_len) {
  std::vector<std::uint64_t> f(freq.begin(), freq.end());
  std::vector<std::uint8_t> lengths(f.size(), 0);
  std::size_t used = std::count_if(f.begin(), f.end(), [](auto v) { return v > 0; });
  if (used == 0) return lengths;
  if (used == 1) {
    for (std::size_t s = 0; s < f.size(); ++s)
      if (f[s] > 0) lengths[s] = 1;
    return lengths;
  }
  for (;;) {
    auto depth = tree_depths(f);
    if (*std::max_element(depth.begin(), depth.end()) <= max_len) {
      for (std::size_t s = 0; s < f.size(); ++s) lengths[s] = static_cast<std::uint8_t>(depth[s]);
      return lengths;
    }
    // Flatten the distribution and retry.
    for (auto& v : f)
      if (v > 0) v = std::max<std::uint64_t>(1, v >> 1);
  }
}

std::vector<std::uint32_t> canonical_codes(std::span<const std::uint8_t> lengths) {
  unsigned max_len = 0;
  for (auto l : lengths) max_len = std::max<unsigned>(max_len, l);
  std::vector<std::uint32_t> count(max_len + 1, 0);
  for (auto l : lengths)
    if (l) ++count[l];
  std::vector<std::uint32_t> next(max_len + 2, 0);
  std::uint32_t code = 0;
  for (unsigned len = 1; len <= max_len; ++len) {
    code = (code + count[len - 1]) << 1;
    next[len] = code;
  }
  std::vector<std::uint32_t> codes(lengths.size(), 0);
  for (std::size_t s = 0; s < lengths.size(); ++s)
    if (lengths[s]) codes[s] = next[lengths[s]]++;
  return codes;
}

Decoder::Decoder(std::span<const std::uint8_t> lengths) {
  for (auto l : lengths) max_len_ = std::max<unsigned>(max_len_, l);
  count_.assign(max_len_ + 1, 0);
  for (auto l : lengths)
    if (l) ++count_[l];
  // Kraft check: the code must not be over-subscribed.
  std::uint64_t kraft = 0;
  for (unsigned len = 1; len <= max_len_; ++len) kraft += std::uint64_t{count_[len]} << (max_len_ - len);
  if (max_len_ > 0 && kraft > (std::uint64_t{1} << max_len_))
    throw CodecFailure("blocksort: invalid Huffman table");

  first_code_.assign(max_len_ + 1, 0);
  first_index_.assign(max_len_ + 1, 0);
  std::uint32_t code = 0, index = 0;
  for (unsigned len = 1; len <= max_len_; ++len) {
    code = (code + count_[len - 1]) << 1;
    first_code_[len] = code;
    first_index_[len] = index;
    index += count_[len];
  }
  count_[0] = 0;
  for (unsigned len = 1; len <= max_len_; ++len)
    for (std::uint32_t s = 0; s < lengths.size(); ++s)
      if (lengths[s] == len) symbols_.push_back(s);
}

std::uint32_t Decoder::decode(BitReader& in) const {
  std::uint32_t code = 0;
  for (unsigned len = 1; len <= max_len_; ++len) {
    code = (code << 1) | in.bit();
    if (count_[len] && code >= first_code_[len] && code - first_code_[len] < count_[len])
      return symbols_[first_index_[len] + (code - first_code_[len])];
  }
  throw CodecFailure("blocksort: undecodable Huffman symbol");
}

}  // namespace ncdtree::huffman
