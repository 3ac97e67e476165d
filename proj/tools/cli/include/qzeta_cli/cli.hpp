#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qzeta::cli {

enum ExitCode : int {
    kOk = 0,
    kPrecondition = 1,
    kVerificationFailed = 2,
    kBudgetExhausted = 3,
};

/// Runs one `qzeta` invocation. argv[0] is the program name. The report goes
/// to `out` (or to --out), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qzeta::cli
