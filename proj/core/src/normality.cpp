#include "ncdtree/normality.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "ncdtree/errors.hpp"

namespace ncdtree {

double SlackParams::slack(std::uint64_t n) const {
  return alpha * std::log2(static_cast<double>(std::max<std::uint64_t>(n, 2))) + beta;
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::Idempotency: return "idempotency";
    case Axiom::Monotonicity: return "monotonicity";
    case Axiom::Symmetry: return "symmetry";
    case Axiom::Distributivity: return "distributivity";
    case Axiom::Subadditivity: return "subadditivity";
  }
  return "unknown";
}

bool NormalityReport::all_pass() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomRecord& r) { return r.pass; });
}

std::string NormalityReport::to_text() const {
  std::ostringstream os;
  os << "normality audit: codec=" << codec << " slack=" << slack.alpha << "*log2(n)+" << slack.beta << " bytes\n";
  os << std::left << std::setw(16) << "axiom" << std::right << std::setw(10) << "samples" << std::setw(16)
     << "max_violation" << std::setw(14) << "max_relative" << "  result\n";
  for (const auto& r : axioms) {
    os << std::left << std::setw(16) << to_string(r.axiom) << std::right << std::setw(10) << r.samples
       << std::setw(16) << r.max_violation << std::setw(14) << std::setprecision(6) << r.max_relative_violation
       << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  os << "overall: " << (all_pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string NormalityReport::to_key_values() const {
  std::ostringstream os;
  os << std::setprecision(15);
  os << "codec=" << codec << '\n';
  os << "slack.alpha=" << slack.alpha << '\n';
  os << "slack.beta=" << slack.beta << '\n';
  for (const auto& r : axioms) {
    auto key = to_string(r.axiom);
    os << key << ".samples=" << r.samples << '\n';
    os << key << ".max_violation=" << r.max_violation << '\n';
    os << key << ".max_relative_violation=" << r.max_relative_violation << '\n';
    os << key << ".pass=" << (r.pass ? "true" : "false") << '\n';
  }
  os << "pass=" << (all_pass() ? "true" : "false") << '\n';
  return os.str();
}

namespace {

void record(AxiomRecord& r, double violation, double reference, std::uint64_t n, const SlackParams& slack) {
  ++r.samples;
  r.max_violation = std::max(r.max_violation, violation);
  if (reference > 0) r.max_relative_violation = std::max(r.max_relative_violation, violation / reference);
  if (violation > slack.slack(n)) r.pass = false;
}

}  // namespace

NormalityReport audit_normality(const Compressor& compressor, std::span<const Bytes> corpus,
                                const SlackParams& slack, unsigned workers) {
  const std::size_t n = corpus.size();
  if (n < 3) throw InvalidInput("normality audit needs at least 3 corpus items, got " + std::to_string(n));

  // Code lengths of singles and all ordered concatenations (including xx).
  std::vector<double> single(n);
  std::vector<double> pair(n * n);
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) jobs.emplace_back(i, j);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      auto [i, j] = jobs[k];
      try {
        pair[i * n + j] = static_cast<double>(compressor.concat_code_length(corpus[i], corpus[j]).bytes);
        if (i == j) single[i] = static_cast<double>(compressor.code_length(corpus[i]).bytes);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < std::max(1u, workers); ++w) pool.emplace_back(work);
  work();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  auto C = [&](std::size_t i) { return single[i]; };
  auto CC = [&](std::size_t i, std::size_t j) { return pair[i * n + j]; };
  auto len = [&](std::size_t i) { return static_cast<std::uint64_t>(corpus[i].size()); };

  NormalityReport report;
  report.codec = compressor.codec().name();
  report.slack = slack;
  for (std::size_t a = 0; a < kAllAxioms.size(); ++a) report.axioms[a].axiom = kAllAxioms[a];
  auto& idem = report.axioms[0];
  auto& mono = report.axioms[1];
  auto& sym = report.axioms[2];
  auto& dist = report.axioms[3];
  auto& sub = report.axioms[4];

  for (std::size_t x = 0; x < n; ++x) record(idem, std::abs(CC(x, x) - C(x)), C(x), 2 * len(x), slack);

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const std::uint64_t nxy = len(x) + len(y);
      const double ref = std::max(C(x), C(y));
      record(mono, std::max(0.0, C(x) - CC(x, y)), ref, nxy, slack);
      record(sub, std::max(0.0, CC(x, y) - C(x) - C(y)), ref, nxy, slack);
      if (x < y) record(sym, std::abs(CC(x, y) - CC(y, x)), ref, nxy, slack);
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        const std::uint64_t longest = std::max({nxy, len(x) + len(z), len(y) + len(z)});
        const double v = CC(x, y) + C(z) - CC(x, z) - CC(y, z);
        record(dist, std::max(0.0, v), std::max(ref, C(z)), longest, slack);
      }
    }
  }
  return report;
}

}  // namespace ncdtree
