#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/cli.hpp"
#include "ncdtree/bytes.hpp"
#include "ncdtree/distance_matrix.hpp"
#include "ncdtree/generators.hpp"
#include "ncdtree/tree_io.hpp"

namespace ncdtree {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out, err;
};

Run ncdtree(std::vector<std::string> args) {
  args.insert(args.begin(), "ncdtree");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

void spit(const fs::path& p, std::string_view text) {
  std::ofstream(p, std::ios::binary) << text;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("ncdtree_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Three small text files with different content.
  std::string small_corpus() const {
    const fs::path d = dir_ / "corpus";
    fs::create_directories(d);
    spit(d / "b.txt", "the quick brown fox jumps over the lazy dog, again and again and again\n");
    spit(d / "a.txt", "the quick brown fox jumps over the lazy cat, again and again\n");
    spit(d / "c.txt", "0123456789 0123456789 0123456789 lorem ipsum dolor sit amet\n");
    return d.string();
  }

  std::string synthetic_matrix(std::size_t n, std::uint64_t seed) const {
    const std::string m = path("tree" + std::to_string(n) + ".txt");
    save_matrix(m, gen_random_tree_metric(n, seed).matrix);
    return m;
  }

  fs::path dir_;
};

TEST_F(CliTest, VersionAndHelpExitZero) {
  EXPECT_EQ(ncdtree({"--version"}).code, 0);
  EXPECT_EQ(ncdtree({"--help"}).code, 0);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(ncdtree({}).code, cli::kUsageError);
  EXPECT_EQ(ncdtree({"maketree"}).code, cli::kUsageError);
  EXPECT_EQ(ncdtree({"ncd", "--bogus-flag", "x"}).code, cli::kUsageError);
  EXPECT_EQ(ncdtree({"--compressor", "zstd", "ncd", "a", "b"}).code, cli::kUsageError);
  EXPECT_EQ(ncdtree({"--workers", "0", "ncd", "a", "b"}).code, cli::kUsageError);
}

TEST_F(CliTest, DirectoryInputIsReadInLexicographicOrder) {
  auto r = ncdtree({"ncd", small_corpus()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto m = parse_matrix(r.out);
  EXPECT_EQ(m.labels(), (std::vector<std::string>{"a.txt", "b.txt", "c.txt"}));
  EXPECT_TRUE(m.is_symmetric());
}

TEST_F(CliTest, IdentityCompressorGivesOneOffTheDiagonal) {
  auto r = ncdtree({"--compressor", "identity", "ncd", small_corpus()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto m = parse_matrix(r.out);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) EXPECT_EQ(m(i, j), 1.0);
}

TEST_F(CliTest, SymmetricMinOutputIsExactlySymmetric) {
  auto r = ncdtree({"--mode", "symmetric-min", "ncd", "--no-symmetrize", small_corpus()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(parse_matrix(r.out).is_symmetric());
}

TEST_F(CliTest, NcdWritesAManifest) {
  const std::string out = path("m.txt");
  auto r = ncdtree({"--out", out, "ncd", small_corpus()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  auto j = nlohmann::json::parse(slurp(out + ".manifest.json"));
  for (const char* key : {"tool", "tool_version", "timestamp", "command_line", "seed", "codec", "inputs", "outputs"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["codec"]["name"], "blocksort");
  ASSERT_EQ(j["inputs"].size(), 3u);
  EXPECT_EQ(j["inputs"][0]["sha256"].get<std::string>().size(), 64u);
  ASSERT_EQ(j["outputs"].size(), 1u);
}

TEST_F(CliTest, MaketreeRecoversASyntheticTree) {
  const std::string m = synthetic_matrix(10, 4);
  const std::string tree = path("t.dot");
  auto r = ncdtree({"--seed", "7", "--out", tree, "maketree", m});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "S(T)=1.000000\n");
  EXPECT_NE(r.err.find("halt: perfect"), std::string::npos);
  EXPECT_NO_THROW(parse_dot(slurp(tree)));

  // The trace is a nondecreasing best-score series.
  std::istringstream trace(slurp(tree + ".trace.csv"));
  std::string line;
  std::getline(trace, line);
  EXPECT_EQ(line, "candidates,best_S");
  double last_s = -1;
  long last_c = -1;
  while (std::getline(trace, line)) {
    const auto comma = line.find(',');
    const long c = std::stol(line.substr(0, comma));
    const double s = std::stod(line.substr(comma + 1));
    EXPECT_GT(c, last_c);
    EXPECT_GE(s, last_s);
    last_c = c;
    last_s = s;
  }
  EXPECT_EQ(last_s, 1.0);

  auto j = nlohmann::json::parse(slurp(tree + ".manifest.json"));
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["outputs"].size(), 2u);
}

TEST_F(CliTest, RerunsAreByteIdentical) {
  const std::string corpus = small_corpus();
  for (const char* tag : {"1", "2"}) {
    const std::string m = path(std::string("m") + tag + ".txt");
    ASSERT_EQ(ncdtree({"--out", m, "ncd", corpus}).code, 0);
  }
  EXPECT_EQ(slurp(path("m1.txt")), slurp(path("m2.txt")));

  const std::string m = synthetic_matrix(12, 9);
  for (const char* tag : {"1", "2"}) {
    const std::string t = path(std::string("t") + tag + ".nwk");
    ASSERT_EQ(ncdtree({"--seed", "3", "--format", "newick", "--out", t, "maketree", m}).code, 0);
  }
  EXPECT_EQ(slurp(path("t1.nwk")), slurp(path("t2.nwk")));
  EXPECT_EQ(slurp(path("t1.nwk.trace.csv")), slurp(path("t2.nwk.trace.csv")));
}

TEST_F(CliTest, AuditCompressorFailsForIdentity) {
  // Idempotency fails for the identity once |x| exceeds the slack.
  const fs::path d = dir_ / "big";
  fs::create_directories(d);
  for (const char* name : {"x", "y", "z"}) {
    std::string text;
    for (int i = 0; i < 40; ++i) text += std::string(name) + " line " + std::to_string(i * i) + "\n";
    spit(d / name, text);
  }
  const std::string corpus = d.string();
  auto r = ncdtree({"--compressor", "identity", "audit", "compressor", corpus, "--key-values"});
  EXPECT_EQ(r.code, cli::kAuditFailed);
  EXPECT_NE(r.out.find("idempotency.pass=false"), std::string::npos) << r.out;
  EXPECT_EQ(ncdtree({"audit", "compressor", corpus}).code, 0);
}

TEST_F(CliTest, AuditMatrixOnATreeMetricPasses) {
  auto r = ncdtree({"audit", "matrix", synthetic_matrix(9, 2)});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("triangle_violations=0"), std::string::npos);
}

TEST_F(CliTest, AuditMatrixOnAnAsymmetricMatrixFails) {
  const std::string m = path("asym.txt");
  spit(m, "3\na 0 0.5 0.9\nb 0.6 0 0.4\nc 0.9 0.4 0\n");
  auto r = ncdtree({"audit", "matrix", m});
  EXPECT_EQ(r.code, cli::kAuditFailed);
  EXPECT_NE(r.out.find("max_symmetry_deviation=0.1"), std::string::npos) << r.out;
}

TEST_F(CliTest, RawTagMatrixAudit) {
  const std::string tags = path("tags"), raw = path("raw.txt");
  ASSERT_EQ(ncdtree({"--seed", "1", "--out", tags, "gen", "tags"}).code, 0);
  EXPECT_TRUE(fs::exists(tags + ".manifest.json"));
  EXPECT_EQ(std::distance(fs::directory_iterator(tags), fs::directory_iterator()), 22);
  ASSERT_EQ(ncdtree({"--out", raw, "ncd", "--no-symmetrize", tags}).code, 0);
  auto r = ncdtree({"audit", "matrix", raw, "--tolerance", "0.1"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("max_symmetry_deviation=0.000950941601997046\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("max_triangle_violation=0\n"), std::string::npos) << r.out;
  EXPECT_EQ(ncdtree({"audit", "matrix", raw}).code, cli::kAuditFailed);
}

TEST_F(CliTest, MalformedMatrixNamesTheLine) {
  const std::string m = path("bad.txt");
  spit(m, "3\na 0 0.5 0.9\nb 0.5 0 zz\nc 0.9 0.4 0\n");
  auto r = ncdtree({"maketree", m});
  EXPECT_EQ(r.code, cli::kInvalidInput);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST_F(CliTest, TooFewLeavesIsInvalidInput) {
  const std::string m = path("three.txt");
  spit(m, "3\na 0 0.5 0.9\nb 0.5 0 0.4\nc 0.9 0.4 0\n");
  EXPECT_EQ(ncdtree({"maketree", m}).code, cli::kInvalidInput);
}

TEST_F(CliTest, MissingFileIsAnIoError) {
  EXPECT_EQ(ncdtree({"maketree", path("nope.txt")}).code, cli::kIoError);
  EXPECT_EQ(ncdtree({"ncd", path("nope1"), path("nope2")}).code, cli::kIoError);
}

TEST_F(CliTest, UnavailableCompressorIsACodecError) {
  auto r = ncdtree({"--compressor-cmd", "ncdtree-no-such-compressor-xyz", "ncd", small_corpus()});
  EXPECT_EQ(r.code, cli::kCodecError) << r.err;
  r = ncdtree({"--compressor-cmd", "sh -c 'cat >/dev/null; exit 9'", "ncd", small_corpus()});
  EXPECT_EQ(r.code, cli::kCodecError) << r.err;
}

TEST_F(CliTest, ExternalCompressorManifestRecordsTheExecutable) {
  const std::string out = path("m.txt");
  auto r = ncdtree({"--compressor-cmd", "gzip -c", "--out", out, "ncd", small_corpus()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(slurp(out + ".manifest.json"));
  EXPECT_EQ(j["codec"]["kind"], "external-command");
  EXPECT_EQ(j["codec"]["executable_sha256"].get<std::string>().size(), 64u);
}

TEST_F(CliTest, GenTreeWritesMatrixTreeAndManifest) {
  const std::string out = path("g.txt");
  ASSERT_EQ(ncdtree({"--seed", "5", "--out", out, "gen", "tree", "--leaves", "8"}).code, 0);
  auto m = load_matrix(out);
  EXPECT_EQ(m.size(), 8u);
  auto tree = parse_dot(slurp(out + ".dot"));
  EXPECT_EQ(tree.leaf_count(), 8u);
  EXPECT_TRUE(fs::exists(out + ".manifest.json"));
}

TEST_F(CliTest, ExperimentRandomTreeWritesArtifacts) {
  const std::string out = path("exp");
  auto r = ncdtree({"--seed", "2", "--out", out, "experiment", "run", "randomtree", "--leaves", "10"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  for (const char* f : {"matrix.txt", "tree.dot", "trace.csv", "report.txt", "manifest.json"})
    EXPECT_TRUE(fs::exists(fs::path(out) / f)) << f;
  EXPECT_NE(r.out.find("S(T)=1.000000"), std::string::npos);
}

TEST_F(CliTest, ExperimentWithAFailingCheckExitsSix) {
  // A search stopped after one stale candidate cannot reach S = 1 on 30 leaves.
  auto r = ncdtree({"--seed", "1", "experiment", "run", "randomtree", "--leaves", "30", "--max-stale", "1"});
  EXPECT_EQ(r.code, cli::kAuditFailed) << r.out;
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, UnknownExperimentIsAUsageError) {
  EXPECT_EQ(ncdtree({"experiment", "run", "music"}).code, cli::kUsageError);
}

TEST_F(CliTest, Blockdist) {
  const fs::path d = dir_ / "dna";
  fs::create_directories(d);
  spit(d / "s1", "ACGTACGTACGTAAAA");
  spit(d / "s2", "ACGTACGTACGTAAAC");
  spit(d / "s3", "TTTTTTTTGGGGCCCC");
  auto r = ncdtree({"blockdist", d.string(), "--k", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto m = parse_matrix(r.out);
  EXPECT_LT(m(0, 1), m(0, 2));
  spit(d / "s4", "ACGTN");
  EXPECT_EQ(ncdtree({"blockdist", d.string()}).code, cli::kInvalidInput);
}

}  // namespace
}  // namespace ncdtree
