#include "ncdtree/ncd.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "ncdtree/errors.hpp"

namespace ncdtree {

std::string_view to_string(NumeratorMode mode) {
  return mode == NumeratorMode::Plain ? "plain" : "symmetric-min";
}

NumeratorMode numerator_mode_from_string(std::string_view name) {
  if (name == "plain") return NumeratorMode::Plain;
  if (name == "symmetric-min") return NumeratorMode::SymmetricMin;
  throw InvalidInput("unknown numerator mode '" + std::string(name) + "' (expected plain or symmetric-min)");
}

namespace {

double ncd_from_lengths(double cx, double cy, double cxy, const std::string& x, const std::string& y) {
  const double hi = std::max(cx, cy);
  if (hi == 0) throw DegenerateInput("NCD undefined: C(" + x + ") = C(" + y + ") = 0");
  return (cxy - std::min(cx, cy)) / hi;
}

void require_content(const Document& d) {
  if (d.content.empty()) throw InvalidInput("document '" + d.label + "' is empty");
}

}  // namespace

double ncd(const Compressor& compressor, const Document& x, const Document& y, NumeratorMode mode) {
  require_content(x);
  require_content(y);
  const auto cx = static_cast<double>(compressor.code_length(x.content).bytes);
  const auto cy = static_cast<double>(compressor.code_length(y.content).bytes);
  auto cxy = static_cast<double>(compressor.concat_code_length(x.content, y.content).bytes);
  if (mode == NumeratorMode::SymmetricMin)
    cxy = std::min(cxy, static_cast<double>(compressor.concat_code_length(y.content, x.content).bytes));
  return ncd_from_lengths(cx, cy, cxy, x.label, y.label);
}

double conditional_information(const Compressor& compressor, const Document& x, const Document& y) {
  require_content(x);
  require_content(y);
  const auto cxy = static_cast<double>(compressor.concat_code_length(x.content, y.content).bytes);
  const auto cx = static_cast<double>(compressor.code_length(x.content).bytes);
  return cxy - cx;
}

DistanceMatrix build_matrix(const Compressor& compressor, std::span<const Document> docs,
                            const MatrixOptions& options) {
  const std::size_t n = docs.size();
  if (n < 2) throw InvalidInput("need at least 2 documents, got " + std::to_string(n));
  validate_documents(docs);
  for (const auto& d : docs) require_content(d);

  std::vector<std::string> labels;
  for (const auto& d : docs) labels.push_back(d.label);
  DistanceMatrix m(std::move(labels));
  m.metadata["codec"] = compressor.codec().name();
  m.metadata["mode"] = std::string(to_string(options.mode));
  m.metadata["symmetrize"] = options.symmetrize ? "true" : "false";

  // Phase 1: C(x) once per document. Phase 2: both concatenation orders for
  // each unordered pair i <= j. Results land in slots fixed by index.
  std::vector<double> single(n);
  std::vector<double> joint(n * n);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);

  struct Failure {
    std::size_t order = SIZE_MAX;
    std::exception_ptr error;
    std::string where;
  };
  Failure failure;
  std::mutex failure_mutex;
  auto note_failure = [&](std::size_t order, std::string where) {
    std::lock_guard lock(failure_mutex);
    if (order < failure.order) failure = {order, std::current_exception(), std::move(where)};
  };

  auto run = [&](std::size_t job_count, auto&& job) {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < job_count;) job(k);
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < std::max(1u, options.workers); ++w) pool.emplace_back(worker);
    worker();
  };

  run(n, [&](std::size_t i) {
    try {
      single[i] = static_cast<double>(compressor.code_length(docs[i].content).bytes);
    } catch (...) {
      note_failure(i, docs[i].label);
    }
  });
  if (!failure.error) {
    run(pairs.size(), [&](std::size_t k) {
      auto [i, j] = pairs[k];
      try {
        joint[i * n + j] = static_cast<double>(compressor.concat_code_length(docs[i].content, docs[j].content).bytes);
        if (i != j)
          joint[j * n + i] =
              static_cast<double>(compressor.concat_code_length(docs[j].content, docs[i].content).bytes);
      } catch (...) {
        note_failure(n + k, "(" + docs[i].label + ", " + docs[j].label + ")");
      }
    });
  }
  if (failure.error) {
    try {
      std::rethrow_exception(failure.error);
    } catch (const CodecUnavailable& e) {
      throw CodecUnavailable("while compressing " + failure.where + ": " + e.what());
    } catch (const CodecError& e) {
      throw CodecFailure("while compressing " + failure.where + ": " + e.what());
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double cxy = joint[i * n + j];
      if (options.mode == NumeratorMode::SymmetricMin) cxy = std::min(cxy, joint[j * n + i]);
      m(i, j) = ncd_from_lengths(single[i], single[j], cxy, docs[i].label, docs[j].label);
    }
  }
  if (options.symmetrize) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double mean = (m(i, j) + m(j, i)) / 2;
        m(i, j) = mean;
        m(j, i) = mean;
      }
    }
  }
  return m;
}

}  // namespace ncdtree
