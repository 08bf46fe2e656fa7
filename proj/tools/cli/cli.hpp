#pragma once

#include <iosfwd>

namespace ncdtree::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kUsageError = 2,
  kIoError = 3,
  kInvalidInput = 4,
  kCodecError = 5,
  kAuditFailed = 6,
};

/// Runs the `ncdtree` command line. Artifacts go to files or `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ncdtree::cli
