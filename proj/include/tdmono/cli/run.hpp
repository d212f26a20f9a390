#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdmono::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1, // validation failure, or a verdict failure under --strict
    kInputError = 2,  // unreadable file, parse or schema error, bad arguments
    kInternalError = 3,
};

// argv[0] is the program name. Results go to `out` (unless -o is given),
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tdmono::cli
