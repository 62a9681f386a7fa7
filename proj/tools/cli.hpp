#pragma once

#include <iosfwd>
#include <string>

namespace jacang::cli {

enum ExitCode : int { kPass = 0, kVerifyFail = 1, kUsage = 2, kResource = 3 };

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// %.17g; "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double v);

}  // namespace jacang::cli
