#include "ncdtree/search.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "ncdtree/errors.hpp"
#include "ncdtree/mutation.hpp"
#include "ncdtree/rng.hpp"

namespace ncdtree {

void SearchConfig::validate() const {
  if (max_stale == 0) throw InvalidInput("max_stale must be at least 1");
  if (workers == 0) throw InvalidInput("workers must be at least 1");
  if (time_budget && !(*time_budget > 0.0)) throw InvalidInput("time budget must be positive");
  if (!(s_one_epsilon >= 0.0)) throw InvalidInput("s_one_epsilon must be non-negative");
}

const char* to_string(HaltReason reason) noexcept {
  switch (reason) {
    case HaltReason::Perfect: return "perfect";
    case HaltReason::Stale: return "stale";
    case HaltReason::Time: return "time";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(std::optional<double> seconds) {
    if (seconds)
      at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
  }
  bool passed() const { return at_ && Clock::now() >= *at_; }

 private:
  std::optional<Clock::time_point> at_;
};

void check_matrix(const DistanceMatrix& matrix) {
  if (matrix.size() < 4) throw InvalidInput("tree search needs at least 4 objects, got " + std::to_string(matrix.size()));
  if (!matrix.is_symmetric()) throw InvalidInput("tree search needs a symmetric matrix");
}

SearchResult climb_single(const DistanceMatrix& matrix, const QuartetScorer& scorer, const SearchConfig& config) {
  Rng rng(config.seed);
  Deadline deadline(config.time_budget);
  ClusterTree best = random_tree(matrix.labels(), rng);
  TreeScore best_score = scorer.score(best);
  SearchTrace trace;
  trace.points.push_back({0, best_score.s});

  std::uint64_t candidates = 0, stale = 0;
  for (;;) {
    if (scorer.is_perfect(best_score, config.s_one_epsilon)) {
      trace.halt = HaltReason::Perfect;
      break;
    }
    if (stale >= config.max_stale) {
      trace.halt = HaltReason::Stale;
      break;
    }
    if (deadline.passed()) {
      trace.halt = HaltReason::Time;
      break;
    }
    ClusterTree candidate = best;
    full_mutation(candidate, rng);
    if (config.check_invariants) candidate.validate();
    TreeScore s = scorer.score(candidate);
    ++candidates;
    if (s.s > best_score.s) {
      best = std::move(candidate);
      best_score = s;
      stale = 0;
      trace.points.push_back({candidates, best_score.s});
    } else {
      ++stale;
    }
  }
  trace.total_candidates = candidates;
  if (trace.points.back().candidates != candidates) trace.points.push_back({candidates, best_score.s});
  return {std::move(best), best_score, std::move(trace)};
}

// Best-known tree shared by parallel climbers.
struct SharedBest {
  std::mutex mu;
  std::optional<ClusterTree> tree;
  TreeScore score{0, 0, 0, -1.0};
  std::uint64_t version = 0;
  std::vector<TracePoint> points;
  std::atomic<std::uint64_t> candidates{0};
  std::atomic<bool> perfect{false};
  std::atomic<bool> timed_out{false};

  void publish(const ClusterTree& t, const TreeScore& s) {
    std::lock_guard lock(mu);
    if (tree && !(s.s > score.s)) return;
    tree = t;
    score = s;
    ++version;
    points.push_back({candidates.load(), s.s});
  }
};

void climb_worker(const DistanceMatrix& matrix, const QuartetScorer& scorer, const SearchConfig& config,
                  unsigned worker, const Deadline& deadline, SharedBest& shared) {
  constexpr std::uint64_t kSyncInterval = 64;
  Rng rng(derive_seed(config.seed, worker));
  ClusterTree best = random_tree(matrix.labels(), rng);
  TreeScore best_score = scorer.score(best);
  shared.publish(best, best_score);
  std::uint64_t seen_version = 0, stale = 0, local = 0;

  while (!shared.perfect.load(std::memory_order_relaxed)) {
    if (scorer.is_perfect(best_score, config.s_one_epsilon)) {
      shared.perfect = true;
      break;
    }
    if (stale >= config.max_stale) break;
    if (shared.timed_out.load(std::memory_order_relaxed)) break;
    if (deadline.passed()) {
      shared.timed_out = true;
      break;
    }
    if (++local % kSyncInterval == 0) {
      std::lock_guard lock(shared.mu);
      if (shared.version != seen_version) {
        seen_version = shared.version;
        if (shared.score.s > best_score.s) {
          best = *shared.tree;
          best_score = shared.score;
          stale = 0;
        }
      }
    }
    ClusterTree candidate = best;
    full_mutation(candidate, rng);
    if (config.check_invariants) candidate.validate();
    TreeScore s = scorer.score(candidate);
    shared.candidates.fetch_add(1, std::memory_order_relaxed);
    if (s.s > best_score.s) {
      best = std::move(candidate);
      best_score = s;
      stale = 0;
      shared.publish(best, best_score);
    } else {
      ++stale;
    }
  }
}

SearchResult climb_parallel(const DistanceMatrix& matrix, const QuartetScorer& scorer, const SearchConfig& config) {
  SharedBest shared;
  Deadline deadline(config.time_budget);
  {
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(config.workers);
    for (unsigned w = 0; w < config.workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          climb_worker(matrix, scorer, config, w, deadline, shared);
        } catch (...) {
          errors[w] = std::current_exception();
          shared.perfect = true;  // stop the others
        }
      });
    }
    pool.clear();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  SearchTrace trace;
  trace.total_candidates = shared.candidates.load();
  // Publications from start trees arrive at candidate counts > 0 only if
  // another climber already ran; keep the sequence nondecreasing in S.
  trace.points = std::move(shared.points);
  trace.points.front().candidates = 0;
  for (std::size_t i = 1; i < trace.points.size(); ++i)
    trace.points[i].candidates = std::max(trace.points[i].candidates, trace.points[i - 1].candidates);
  if (trace.points.back().candidates != trace.total_candidates)
    trace.points.push_back({trace.total_candidates, shared.score.s});
  if (scorer.is_perfect(shared.score, config.s_one_epsilon))
    trace.halt = HaltReason::Perfect;
  else if (shared.timed_out)
    trace.halt = HaltReason::Time;
  else
    trace.halt = HaltReason::Stale;
  return {std::move(*shared.tree), shared.score, std::move(trace)};
}

}  // namespace

SearchResult hill_climb(const DistanceMatrix& matrix, const SearchConfig& config) {
  config.validate();
  check_matrix(matrix);
  QuartetScorer scorer(matrix);
  return config.workers == 1 ? climb_single(matrix, scorer, config) : climb_parallel(matrix, scorer, config);
}

std::string trace_to_csv(const SearchTrace& trace) {
  std::ostringstream os;
  os.precision(15);
  os << "candidates,best_S\n";
  for (const auto& p : trace.points) os << p.candidates << ',' << p.best_s << '\n';
  return os.str();
}

}  // namespace ncdtree
