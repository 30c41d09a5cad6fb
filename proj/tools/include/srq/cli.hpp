#ifndef SRQ_CLI_HPP
#define SRQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace srq::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace srq::cli

#endif  // SRQ_CLI_HPP
