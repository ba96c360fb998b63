#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schurpath::cli {

/// Exit codes: 0 success or Pass, 1 verification Fail, 2 usage error.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurpath::cli
