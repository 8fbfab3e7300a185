#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperkey::cli {

inline constexpr int kSchemaVersion = 1;

/// Exit codes: 0 success, 1 domain error or property failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperkey::cli
