#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace optb::cli {

// Dispatches one command. args excludes the program name. Exit codes:
// 0 success, 1 domain error, 2 usage error. OPTB_OUTPUT=table|jsonl picks
// the default output mode; --output overrides it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace optb::cli
