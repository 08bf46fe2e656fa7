#include <gtest/gtest.h>

#include "ncdtree/compressor.hpp"
#include "ncdtree/errors.hpp"
#include "ncdtree/external_codec.hpp"
#include "oracle/generators.hpp"

namespace ncdtree {
namespace {

TEST(ExternalCommandCodec, CountsStandardOutputBytes) {
  ExternalCommandCodec cat({"cat"});
  testgen::Gen gen(1);
  for (std::size_t n : {0u, 1u, 1000u, 300000u}) EXPECT_EQ(cat.measure(gen.random_bytes(n)).bytes, n);
}

TEST(ExternalCommandCodec, RealCompressorIsDeterministic) {
  ExternalCommandCodec gzip({"gzip", "-n", "-c"});
  Bytes x = testgen::Gen(2).text(20000);
  const auto first = gzip.measure(x).bytes;
  EXPECT_LT(first, x.size());
  EXPECT_EQ(gzip.measure(x).bytes, first);
}

TEST(ExternalCommandCodec, MissingCommandIsUnavailable) {
  EXPECT_THROW(ExternalCommandCodec({"definitely-not-a-compressor-xyz"}), CodecUnavailable);
  EXPECT_THROW(ExternalCommandCodec({}), InvalidInput);
}

TEST(ExternalCommandCodec, NonzeroExitIsAFailureWithDiagnostics) {
  ExternalCommandCodec failing({"sh", "-c", "cat >/dev/null; echo boom >&2; exit 3"});
  try {
    failing.measure(to_bytes("hello"));
    FAIL() << "expected CodecFailure";
  } catch (const CodecFailure& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("3"), std::string::npos) << what;
    EXPECT_NE(what.find("boom"), std::string::npos) << what;
  }
}

TEST(ExternalCommandCodec, CommandThatIgnoresInputStillWorksOrFailsCleanly) {
  ExternalCommandCodec early({"sh", "-c", "exit 0"});
  // Closing stdin without reading is a contract violation for large inputs.
  EXPECT_THROW(early.measure(Bytes(1 << 20, 'x')), CodecFailure);
}

TEST(ExternalCommandCodec, SignalIsAFailure) {
  ExternalCommandCodec killed({"sh", "-c", "kill -9 $$"});
  EXPECT_THROW(killed.measure(to_bytes("x")), CodecFailure);
}

TEST(ExternalCommandCodec, WorksThroughCompressor) {
  Compressor c(CodecSpec::external({"cat"}));
  EXPECT_EQ(c.concat_code_length(to_bytes("ab"), to_bytes("cde")).bytes, 5u);
}

}  // namespace
}  // namespace ncdtree
