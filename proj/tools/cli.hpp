#pragma once

// The hzalg command line: homology, apply, verify, show.
//
// Exit codes: 0 success, 1 a suite failed or an internal error, 2 parse or
// usage error (including an unknown suite), 3 dimension mismatch, 4 category
// mismatch, 5 truncation insufficient.

#include <iosfwd>
#include <string>
#include <vector>

namespace hzalg::cli {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2, kDimension = 3, kCategory = 4, kTruncation = 5 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hzalg::cli
