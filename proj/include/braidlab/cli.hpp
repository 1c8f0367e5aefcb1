#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidlab::cli {

/// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kVerificationFailed = 2;
inline constexpr int kUsage = 64;

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidlab::cli
