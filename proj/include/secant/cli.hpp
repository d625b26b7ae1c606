#ifndef SECANT_CLI_HPP
#define SECANT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace secant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a verification or classification failed
inline constexpr int kExitUsage = 2;    // bad arguments, unreadable or malformed input

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secant::cli

#endif  // SECANT_CLI_HPP
