#include "ncdtree/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "ncdtree/compressor.hpp"
#include "ncdtree/errors.hpp"
#include "ncdtree/metric_audit.hpp"
#include "ncdtree/quartet.hpp"

namespace ncdtree {

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::RandomTree: return "randomtree";
    case ExperimentKind::Tags: return "tags";
    case ExperimentKind::FileTypes: return "filetypes";
  }
  return "?";
}

ExperimentKind experiment_from_string(std::string_view name) {
  if (name == "randomtree") return ExperimentKind::RandomTree;
  if (name == "tags") return ExperimentKind::Tags;
  if (name == "filetypes") return ExperimentKind::FileTypes;
  throw InvalidInput("unknown experiment '" + std::string(name) + "' (expected randomtree, tags or filetypes)");
}

bool ExperimentReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::string ExperimentReport::to_text() const {
  std::ostringstream os;
  os << "experiment: " << to_string(kind) << '\n';
  os << "codec: " << codec << '\n';
  os << "objects: " << matrix.size() << '\n';
  os << "S(T)=" << std::fixed << std::setprecision(6) << search.score.s << '\n';
  os << std::defaultfloat << std::setprecision(15);
  os << "C_T=" << search.score.cost << " m=" << search.score.min_cost << " M=" << search.score.max_cost << '\n';
  os << "halt: " << to_string(search.trace.halt) << " after " << search.trace.total_candidates << " candidates\n";
  for (const auto& c : checks) {
    os << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  return os.str();
}

std::vector<double> mean_ncd_by_shared_tags(const DistanceMatrix& matrix) {
  std::vector<double> sum, count;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = i + 1; j < matrix.size(); ++j) {
      const std::size_t k = shared_tag_count(matrix.label(i), matrix.label(j));
      if (k >= sum.size()) {
        sum.resize(k + 1, 0.0);
        count.resize(k + 1, 0.0);
      }
      sum[k] += matrix(i, j);
      count[k] += 1.0;
    }
  }
  std::vector<double> mean(sum.size());
  for (std::size_t k = 0; k < sum.size(); ++k) mean[k] = count[k] > 0 ? sum[k] / count[k] : std::nan("");
  return mean;
}

std::string filetype_group(std::string_view label) { return std::string(label.substr(0, label.find('_'))); }

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

ExperimentReport run_randomtree(const ExperimentConfig& config) {
  auto synthetic = gen_random_tree_metric(config.leaves, config.corpus_seed);
  auto search = hill_climb(synthetic.matrix, config.search);
  std::vector<ExperimentCheck> checks;
  QuartetScorer scorer(synthetic.matrix);
  bool perfect = scorer.is_perfect(search.score, config.search.s_one_epsilon);
  checks.push_back({"perfect-score", perfect, "S(T)=" + fmt(search.score.s)});
  checks.push_back({"same-quartet-topologies", same_quartet_topologies(search.tree, synthetic.tree), ""});
  auto audit = audit_metric(synthetic.matrix, 0.0);
  checks.push_back({"tree-metric-audit", audit.pass && audit.triangle_violations == 0,
                    std::to_string(audit.triangle_violations) + " triangle violations"});
  return {config.kind, "none", std::move(synthetic.matrix), std::move(synthetic.tree), std::move(search),
          std::move(checks)};
}

ExperimentReport run_tags(const ExperimentConfig& config) {
  auto corpus = gen_tag_corpus(config.tags, config.corpus_seed);
  Compressor compressor(config.codec);
  auto matrix = build_matrix(compressor, corpus.files, config.matrix);
  auto means = mean_ncd_by_shared_tags(matrix);
  std::vector<ExperimentCheck> checks;

  double shared_sum = 0.0, shared_n = 0.0;
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = i + 1; j < matrix.size(); ++j)
      if (shared_tag_count(matrix.label(i), matrix.label(j)) > 0) {
        shared_sum += matrix(i, j);
        shared_n += 1.0;
      }
  const double shared_mean = shared_n > 0 ? shared_sum / shared_n : std::nan("");
  const double zero_mean = means.empty() ? std::nan("") : means[0];
  checks.push_back({"shared-below-unshared", shared_mean < zero_mean,
                           "mean NCD shared>=1: " + fmt(shared_mean) + ", shared=0: " + fmt(zero_mean)});
  bool decreasing = means.size() >= 3 && means[1] < means[0] && means[2] < means[1];
  std::string detail;
  for (std::size_t k = 0; k < means.size(); ++k) detail += (k ? ", " : "") + std::to_string(k) + ": " + fmt(means[k]);
  checks.push_back({"decreasing-by-shared-tags", decreasing, detail});

  auto search = hill_climb(matrix, config.search);
  checks.push_back({"score", search.score.s >= config.min_tag_score,
                    "S(T)=" + fmt(search.score.s) + ", need >= " + fmt(config.min_tag_score)});
  return {config.kind, compressor.codec().spec().name, std::move(matrix), std::nullopt, std::move(search),
          std::move(checks)};
}

ExperimentReport run_filetypes(const ExperimentConfig& config) {
  if (config.filetypes_dir.empty()) throw InvalidInput("filetypes experiment needs a corpus directory");
  const std::filesystem::path dirs[] = {config.filetypes_dir};
  auto docs = load_documents(dirs);
  Compressor compressor(config.codec);
  auto matrix = build_matrix(compressor, docs, config.matrix);
  auto search = hill_climb(matrix, config.search);

  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < matrix.size(); ++i) groups[filetype_group(matrix.label(i))].push_back(i);
  // The tree's label indices follow the matrix order.
  std::vector<ExperimentCheck> checks;
  for (const auto& [name, members] : groups)
    checks.push_back({"group-" + name, search.tree.has_split(members), std::to_string(members.size()) + " files"});
  return {config.kind, compressor.codec().spec().name, std::move(matrix), std::nullopt, std::move(search),
          std::move(checks)};
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config) {
  switch (config.kind) {
    case ExperimentKind::RandomTree: return run_randomtree(config);
    case ExperimentKind::Tags: return run_tags(config);
    case ExperimentKind::FileTypes: return run_filetypes(config);
  }
  throw InvalidInput("unknown experiment");
}

}  // namespace ncdtree
