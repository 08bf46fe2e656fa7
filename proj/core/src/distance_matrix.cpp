#include "ncdtree/distance_matrix.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "ncdtree/document.hpp"
#include "ncdtree/errors.hpp"

namespace ncdtree {

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels)
    : labels_(std::move(labels)), entries_(labels_.size() * labels_.size(), 0.0) {
  validate_labels(labels_);
}

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, std::vector<double> entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  validate_labels(labels_);
  if (entries_.size() != labels_.size() * labels_.size())
    throw InvalidInput("matrix has " + std::to_string(entries_.size()) + " entries for " +
                       std::to_string(labels_.size()) + " labels");
}

std::optional<std::size_t> DistanceMatrix::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

bool DistanceMatrix::is_symmetric() const noexcept {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

void write_matrix(std::ostream& os, const DistanceMatrix& m) {
  const std::size_t n = m.size();
  auto old_precision = os.precision(15);
  os << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    os << m.label(i);
    for (std::size_t j = 0; j < n; ++j) os << ' ' << m(i, j);
    os << '\n';
  }
  os.precision(old_precision);
}

std::string to_text(const DistanceMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_value(std::string_view tok, std::size_t line) {
  // strtod accepts everything the writer emits, including exponents.
  std::string s(tok);
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) throw ParseError(line, "not a number: '" + s + "'");
  if (!std::isfinite(v)) throw ParseError(line, "non-finite value '" + s + "'");
  return v;
}

}  // namespace

DistanceMatrix read_matrix(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      if (!split_ws(line).empty()) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(1, "empty matrix file");
  auto head = split_ws(line);
  std::size_t n = 0;
  auto [p, ec] = std::from_chars(head[0].data(), head[0].data() + head[0].size(), n);
  if (head.size() != 1 || ec != std::errc{} || p != head[0].data() + head[0].size())
    throw ParseError(line_no, "expected the matrix size on its own line");
  if (n == 0) throw ParseError(line_no, "matrix size must be positive");

  std::vector<std::string> labels;
  std::vector<double> entries;
  labels.reserve(n);
  entries.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    if (!next_line()) throw ParseError(line_no + 1, "expected " + std::to_string(n) + " rows, got " + std::to_string(row));
    auto toks = split_ws(line);
    if (toks.size() != n + 1)
      throw ParseError(line_no, "row has " + std::to_string(toks.size() - 1) + " values, expected " + std::to_string(n));
    labels.emplace_back(toks[0]);
    for (std::size_t j = 1; j <= n; ++j) entries.push_back(parse_value(toks[j], line_no));
  }
  if (next_line()) throw ParseError(line_no, "trailing data after " + std::to_string(n) + " rows");
  try {
    return DistanceMatrix(std::move(labels), std::move(entries));
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError(line_no, e.what());
  }
}

DistanceMatrix parse_matrix(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_matrix(is);
}

DistanceMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return read_matrix(in);
}

void save_matrix(const std::filesystem::path& path, const DistanceMatrix& m) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_matrix(out, m);
  if (!out) throw IoError("write error on '" + path.string() + "'");
}

}  // namespace ncdtree
