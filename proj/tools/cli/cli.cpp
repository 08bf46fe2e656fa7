#include "cli/cli.hpp"

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/manifest.hpp"
#include "ncdtree/block_frequency.hpp"
#include "ncdtree/compressor.hpp"
#include "ncdtree/document.hpp"
#include "ncdtree/errors.hpp"
#include "ncdtree/experiment.hpp"
#include "ncdtree/generators.hpp"
#include "ncdtree/metric_audit.hpp"
#include "ncdtree/ncd.hpp"
#include "ncdtree/normality.hpp"
#include "ncdtree/search.hpp"
#include "ncdtree/tree_io.hpp"

namespace ncdtree::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  // global
  std::string compressor = "blocksort";
  std::string compressor_cmd;
  std::string mode = "plain";
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::string format = "dot";
  std::string out;

  // per verb
  std::vector<std::string> inputs;
  std::string matrix_file;
  std::string trace_file;
  bool no_symmetrize = false;
  std::uint64_t max_stale = 100000;
  std::optional<double> time_budget;
  double alpha = 10.0;
  double beta = 64.0;
  bool key_values = false;
  double tolerance = 1e-9;
  std::size_t leaves = 18;
  std::string experiment;
  std::string data_dir = NCDTREE_DEFAULT_DATA_DIR;
  std::size_t k = 6;
  std::string alphabet = "ACGT";
  bool no_rescale = false;
};

class Session {
 public:
  Session(const Options& opt, std::vector<std::string> command_line, std::ostream& out, std::ostream& err)
      : opt_(opt), command_line_(std::move(command_line)), out_(out), err_(err) {}

  int ncd();
  int maketree();
  int audit_compressor();
  int audit_matrix();
  int gen_tags();
  int gen_tree();
  int experiment_run();
  int blockdist();

 private:
  CodecSpec codec_spec() const {
    if (!opt_.compressor_cmd.empty()) return CodecSpec::external(split_command(opt_.compressor_cmd));
    return CodecSpec::builtin(opt_.compressor);
  }

  std::vector<Document> documents() const {
    std::vector<fs::path> paths(opt_.inputs.begin(), opt_.inputs.end());
    return load_documents(paths);
  }

  std::vector<FileDigest> input_digests() const {
    std::vector<FileDigest> out;
    for (const auto& in : opt_.inputs) {
      if (fs::is_directory(in)) {
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(in))
          if (e.is_regular_file()) files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) out.push_back(digest_file(f));
      } else {
        out.push_back(digest_file(in));
      }
    }
    return out;
  }

  RunManifest manifest(std::optional<std::uint64_t> seed, std::optional<CodecSpec> codec,
                       std::vector<FileDigest> inputs) const {
    RunManifest m;
    m.command_line = command_line_;
    m.seed = seed;
    m.codec = std::move(codec);
    m.inputs = std::move(inputs);
    m.timestamp = utc_timestamp();
    m.tool_version = NCDTREE_VERSION;
    return m;
  }

  // "-" or empty writes to stdout and returns false.
  bool emit(const std::string& path, std::string_view text) {
    if (path.empty() || path == "-") {
      out_ << text;
      return false;
    }
    write_file(path, text);
    return true;
  }

  void write_manifest(RunManifest m, const fs::path& manifest_file, const std::vector<fs::path>& outputs) {
    for (const auto& o : outputs) m.outputs.push_back(digest_file(o));
    write_file(manifest_file, m.to_json());
  }

  SearchConfig search_config() const {
    SearchConfig c;
    c.seed = opt_.seed;
    c.max_stale = opt_.max_stale;
    c.time_budget = opt_.time_budget;
    c.workers = opt_.workers;
    return c;
  }

  MatrixOptions matrix_options() const {
    return {numerator_mode_from_string(opt_.mode), !opt_.no_symmetrize, opt_.workers};
  }

  std::string tree_extension() const { return opt_.format == "newick" ? ".nwk" : ".dot"; }

  const Options& opt_;
  std::vector<std::string> command_line_;
  std::ostream& out_;
  std::ostream& err_;
};

int Session::ncd() {
  auto docs = documents();
  if (docs.size() < 2) throw InvalidInput("ncd needs at least 2 documents, got " + std::to_string(docs.size()));
  const CodecSpec spec = codec_spec();
  Compressor compressor(spec);
  DistanceMatrix m = build_matrix(compressor, docs, matrix_options());
  if (emit(opt_.out, to_text(m)))
    write_manifest(manifest(std::nullopt, spec, input_digests()), manifest_path_for(opt_.out), {opt_.out});
  return kOk;
}

int Session::maketree() {
  DistanceMatrix m = load_matrix(opt_.matrix_file);
  SearchResult result = hill_climb(m, search_config());
  const std::string tree_text = export_tree(result.tree, tree_format_from_string(opt_.format));
  const std::string trace_text = trace_to_csv(result.trace);
  std::vector<fs::path> outputs;
  if (emit(opt_.out, tree_text)) outputs.emplace_back(opt_.out);
  std::string trace_file = opt_.trace_file;
  if (trace_file.empty() && !outputs.empty()) trace_file = opt_.out + ".trace.csv";
  if (!trace_file.empty()) {
    write_file(trace_file, trace_text);
    outputs.emplace_back(trace_file);
  }
  err_ << "halt: " << to_string(result.trace.halt) << " after " << result.trace.total_candidates << " candidates\n";
  out_ << "S(T)=" << std::fixed << std::setprecision(6) << result.score.s << '\n' << std::defaultfloat;
  if (!outputs.empty())
    write_manifest(manifest(opt_.seed, std::nullopt, {digest_file(opt_.matrix_file)}), manifest_path_for(outputs[0]),
                   outputs);
  return kOk;
}

int Session::audit_compressor() {
  auto docs = documents();
  std::vector<Bytes> corpus;
  for (auto& d : docs) corpus.push_back(std::move(d.content));
  Compressor compressor(codec_spec());
  NormalityReport report = audit_normality(compressor, corpus, SlackParams{opt_.alpha, opt_.beta}, opt_.workers);
  out_ << (opt_.key_values ? report.to_key_values() : report.to_text());
  return report.all_pass() ? kOk : kAuditFailed;
}

int Session::audit_matrix() {
  DistanceMatrix m = load_matrix(opt_.matrix_file);
  MetricAuditReport report = audit_metric(m, opt_.tolerance);
  out_ << report.to_text();
  return report.pass ? kOk : kAuditFailed;
}

int Session::gen_tags() {
  if (opt_.out.empty()) throw InvalidInput("gen tags needs --out DIR");
  const fs::path dir = opt_.out;
  fs::create_directories(dir);
  TagCorpus corpus = gen_tag_corpus(TagSpec{}, opt_.seed);
  std::vector<fs::path> outputs;
  for (const auto& doc : corpus.files) {
    outputs.push_back(dir / doc.label);
    write_file(outputs.back(), ByteView(doc.content));
  }
  const fs::path base = dir.has_filename() ? dir : dir.parent_path();
  write_manifest(manifest(opt_.seed, std::nullopt, {}), manifest_path_for(base), outputs);
  return kOk;
}

int Session::gen_tree() {
  if (opt_.out.empty()) throw InvalidInput("gen tree needs --out FILE");
  SyntheticTreeMetric synthetic = gen_random_tree_metric(opt_.leaves, opt_.seed);
  const std::string tree_file = opt_.out + tree_extension();
  write_file(opt_.out, to_text(synthetic.matrix));
  write_file(tree_file, export_tree(synthetic.tree, tree_format_from_string(opt_.format)));
  write_manifest(manifest(opt_.seed, std::nullopt, {}), manifest_path_for(opt_.out), {opt_.out, tree_file});
  return kOk;
}

int Session::experiment_run() {
  ExperimentConfig config;
  config.kind = experiment_from_string(opt_.experiment);
  config.codec = codec_spec();
  config.matrix = matrix_options();
  config.search = search_config();
  config.corpus_seed = opt_.seed;
  config.leaves = opt_.leaves;
  config.filetypes_dir = fs::path(opt_.data_dir) / "filetypes";
  ExperimentReport report = run_experiment(config);
  const std::string text = report.to_text();
  out_ << text;
  if (!opt_.out.empty()) {
    const fs::path dir = opt_.out;
    fs::create_directories(dir);
    std::vector<fs::path> outputs{dir / "matrix.txt", dir / ("tree" + tree_extension()), dir / "trace.csv",
                                  dir / "report.txt"};
    write_file(outputs[0], to_text(report.matrix));
    write_file(outputs[1], export_tree(report.search.tree, tree_format_from_string(opt_.format)));
    write_file(outputs[2], trace_to_csv(report.search.trace));
    write_file(outputs[3], text);
    std::optional<CodecSpec> codec;
    if (config.kind != ExperimentKind::RandomTree) codec = config.codec;
    write_manifest(manifest(opt_.seed, codec, {}), dir / "manifest.json", outputs);
  }
  return report.all_pass() ? kOk : kAuditFailed;
}

int Session::blockdist() {
  auto docs = documents();
  if (docs.size() < 2) throw InvalidInput("blockdist needs at least 2 documents, got " + std::to_string(docs.size()));
  BlockFrequencyOptions options;
  options.block_length = opt_.k;
  options.alphabet = opt_.alphabet;
  options.rescale = !opt_.no_rescale;
  DistanceMatrix m = block_frequency_distance(docs, options);
  if (emit(opt_.out, to_text(m)))
    write_manifest(manifest(std::nullopt, std::nullopt, input_digests()), manifest_path_for(opt_.out), {opt_.out});
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"NCD matrices and quartet trees from compressed sizes", "ncdtree"};
  app.set_version_flag("--version", std::string(NCDTREE_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--compressor", opt.compressor, "Builtin codec")
      ->check(CLI::IsMember({"lz", "blocksort", "identity"}))
      ->capture_default_str();
  app.add_option("--compressor-cmd", opt.compressor_cmd,
                 "External compressor command reading stdin and writing stdout (overrides --compressor)");
  app.add_option("--mode", opt.mode, "NCD numerator")
      ->check(CLI::IsMember({"plain", "symmetric-min"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  app.add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", opt.format, "Tree format")
      ->check(CLI::IsMember({"dot", "newick"}))
      ->capture_default_str();
  app.add_option("--out", opt.out, "Output file or directory");

  auto* ncd = app.add_subcommand("ncd", "Compute the NCD matrix of files and directories");
  ncd->add_option("inputs", opt.inputs, "Files or directories")->required();
  ncd->add_flag("--no-symmetrize", opt.no_symmetrize, "Keep d(i,j) and d(j,i) as computed");

  auto* maketree = app.add_subcommand("maketree", "Search for the best quartet tree of a matrix");
  maketree->add_option("matrix", opt.matrix_file, "Matrix file")->required();
  maketree->add_option("--max-stale", opt.max_stale, "Stop after this many candidates without improvement")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  maketree->add_option("--time-budget", opt.time_budget, "Stop after this many seconds")->check(CLI::PositiveNumber);
  maketree->add_option("--trace", opt.trace_file, "Trace CSV (default: <out>.trace.csv)");

  auto* audit = app.add_subcommand("audit", "Check a compressor or a matrix");
  audit->require_subcommand(1);
  auto* audit_compressor = audit->add_subcommand("compressor", "Normal-compressor axioms over a corpus");
  audit_compressor->add_option("inputs", opt.inputs, "Corpus files or directories")->required();
  audit_compressor->add_option("--alpha", opt.alpha, "Slack per log2 of input length")->capture_default_str();
  audit_compressor->add_option("--beta", opt.beta, "Constant slack in bytes")->capture_default_str();
  audit_compressor->add_flag("--key-values", opt.key_values, "Print key=value lines");
  auto* audit_matrix = audit->add_subcommand("matrix", "Symmetry and triangle inequality of a matrix");
  audit_matrix->add_option("matrix", opt.matrix_file, "Matrix file")->required();
  audit_matrix->add_option("--tolerance", opt.tolerance, "Largest acceptable violation")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Generate synthetic inputs");
  gen->require_subcommand(1);
  auto* gen_tags = gen->add_subcommand("tags", "Tag-file corpus (22 files)");
  auto* gen_tree = gen->add_subcommand("tree", "Random tree and its tree-metric matrix");
  gen_tree->add_option("--leaves", opt.leaves, "Leaf count")->check(CLI::Range(4, 10000))->capture_default_str();

  auto* experiment = app.add_subcommand("experiment", "Controlled experiments");
  experiment->require_subcommand(1);
  auto* experiment_run = experiment->add_subcommand("run", "Run one experiment and check its outcome");
  experiment_run->add_option("name", opt.experiment, "randomtree, tags or filetypes")
      ->required()
      ->check(CLI::IsMember({"randomtree", "tags", "filetypes"}));
  experiment_run->add_option("--leaves", opt.leaves, "Leaves for randomtree")
      ->check(CLI::Range(4, 10000))
      ->capture_default_str();
  experiment_run->add_option("--data-dir", opt.data_dir, "Bundled data directory")->capture_default_str();
  experiment_run->add_option("--max-stale", opt.max_stale, "Search stop criterion")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  experiment_run->add_option("--time-budget", opt.time_budget, "Search time limit in seconds")
      ->check(CLI::PositiveNumber);
  experiment_run->add_flag("--no-symmetrize", opt.no_symmetrize, "Keep d(i,j) and d(j,i) as computed");

  auto* blockdist = app.add_subcommand("blockdist", "Euclidean distance of k-block frequency vectors");
  blockdist->add_option("inputs", opt.inputs, "Files or directories")->required();
  blockdist->add_option("--k", opt.k, "Block length")->check(CLI::Range(1, 26))->capture_default_str();
  blockdist->add_option("--alphabet", opt.alphabet, "Symbols, in order")->capture_default_str();
  blockdist->add_flag("--no-rescale", opt.no_rescale, "Do not divide by the largest distance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  Session session(opt, std::vector<std::string>(argv, argv + argc), out, err);
  try {
    if (ncd->parsed()) return session.ncd();
    if (maketree->parsed()) return session.maketree();
    if (audit_compressor->parsed()) return session.audit_compressor();
    if (audit_matrix->parsed()) return session.audit_matrix();
    if (gen_tags->parsed()) return session.gen_tags();
    if (gen_tree->parsed()) return session.gen_tree();
    if (experiment_run->parsed()) return session.experiment_run();
    if (blockdist->parsed()) return session.blockdist();
    err << "ncdtree: no command\n";
    return kUsageError;
  } catch (const CodecError& e) {
    err << "ncdtree: codec error: " << e.what() << '\n';
    return kCodecError;
  } catch (const IoError& e) {
    err << "ncdtree: " << e.what() << '\n';
    return kIoError;
  } catch (const InvalidInput& e) {
    err << "ncdtree: invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DegenerateInput& e) {
    err << "ncdtree: invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "ncdtree: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "ncdtree: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace ncdtree::cli
