#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sforest {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out`; failures print a single diagnostic line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sforest
