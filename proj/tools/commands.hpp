#pragma once

#include <iosfwd>

namespace wrg::cli {

enum ExitCode
{
	kOk = 0,
	kFailure = 1,
	kConfigError = 2,
	kResourceCap = 3,
	kVerificationFailed = 4,
};

/// The whole command line, with standard streams passed in for testing.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wrg::cli
