#include <gtest/gtest.h>

#include "ncdtree/compressor.hpp"
#include "ncdtree/document.hpp"
#include "ncdtree/errors.hpp"
#include "ncdtree/normality.hpp"
#include "oracle/generators.hpp"

namespace ncdtree {
namespace {

std::vector<Bytes> text_corpus() {
  const std::filesystem::path dirs[] = {std::filesystem::path(NCDTREE_TEST_DATA_DIR) / "text_corpus"};
  std::vector<Bytes> out;
  for (auto& d : load_documents(dirs)) out.push_back(std::move(d.content));
  return out;
}

TEST(SlackParams, LogarithmicPlusConstant) {
  SlackParams s;
  EXPECT_DOUBLE_EQ(s.slack(1024), 10 * 10 + 64);
  EXPECT_DOUBLE_EQ((SlackParams{2, 1}.slack(8)), 2 * 3 + 1);
}

TEST(NormalityAudit, IdentityFailsOnlyIdempotencyByExactlyTheLength) {
  testgen::Gen gen(3);
  std::vector<Bytes> corpus{gen.random_bytes(100), gen.random_bytes(250), gen.random_bytes(400), gen.text(700)};
  Compressor identity(CodecSpec::builtin("identity"));
  auto report = audit_normality(identity, corpus);
  const auto& idem = report.record(Axiom::Idempotency);
  EXPECT_FALSE(idem.pass);
  EXPECT_EQ(idem.max_violation, 700.0);
  EXPECT_EQ(idem.max_relative_violation, 1.0);
  for (Axiom a : {Axiom::Monotonicity, Axiom::Symmetry, Axiom::Distributivity, Axiom::Subadditivity}) {
    EXPECT_TRUE(report.record(a).pass) << to_string(a);
    EXPECT_EQ(report.record(a).max_violation, 0.0) << to_string(a);
  }
  EXPECT_FALSE(report.all_pass());
}

TEST(NormalityAudit, SampleCounts) {
  testgen::Gen gen(4);
  std::vector<Bytes> corpus{gen.text(300), gen.text(400), gen.text(500), gen.text(600)};
  auto report = audit_normality(Compressor(CodecSpec::builtin("identity")), corpus);
  EXPECT_EQ(report.record(Axiom::Idempotency).samples, 4u);
  EXPECT_EQ(report.record(Axiom::Monotonicity).samples, 12u);
  EXPECT_EQ(report.record(Axiom::Symmetry).samples, 6u);
  EXPECT_EQ(report.record(Axiom::Distributivity).samples, 24u);
  EXPECT_EQ(report.record(Axiom::Subadditivity).samples, 12u);
}

TEST(NormalityAudit, NeedsThreeItems) {
  std::vector<Bytes> corpus{to_bytes("a"), to_bytes("b")};
  EXPECT_THROW(audit_normality(Compressor(CodecSpec::builtin("identity")), corpus), InvalidInput);
}

TEST(NormalityAudit, WorkerCountDoesNotChangeTheReport) {
  testgen::Gen gen(5);
  std::vector<Bytes> corpus{gen.text(2000), gen.text(3000), gen.runs(2500), gen.random_bytes(1000)};
  Compressor c(CodecSpec::builtin("lz"));
  EXPECT_EQ(audit_normality(c, corpus, {}, 1).to_key_values(), audit_normality(c, corpus, {}, 3).to_key_values());
}

TEST(NormalityAudit, BlockSortOnBundledCorpusMatchesGolden) {
  Compressor c(CodecSpec::builtin("blocksort"));
  auto report = audit_normality(c, text_corpus());
  EXPECT_TRUE(report.all_pass()) << report.to_text();
  const Bytes golden = read_file(std::filesystem::path(NCDTREE_FIXTURE_DIR) / "normality_blocksort_text_corpus.txt");
  EXPECT_EQ(report.to_key_values(), std::string(golden.begin(), golden.end()));
}

TEST(NormalityAudit, LzPassesOnBundledCorpus) {
  auto report = audit_normality(Compressor(CodecSpec::builtin("lz")), text_corpus());
  EXPECT_TRUE(report.all_pass()) << report.to_text();
}

TEST(NormalityReport, TextMentionsEveryAxiom) {
  testgen::Gen gen(6);
  std::vector<Bytes> corpus{gen.text(100), gen.text(200), gen.text(300)};
  auto text = audit_normality(Compressor(CodecSpec::builtin("identity")), corpus).to_text();
  for (Axiom a : kAllAxioms) EXPECT_NE(text.find(to_string(a)), std::string::npos);
  EXPECT_NE(text.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace ncdtree
