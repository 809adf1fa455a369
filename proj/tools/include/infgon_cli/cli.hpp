#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infgon::cli {

inline constexpr const char* kSchema = "infgon.cli/1";

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infgon::cli
