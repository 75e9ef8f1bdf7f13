#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace avf::cli {

// Dispatches a subcommand; JSON report on `out`, human summary on `err`.
// Exit codes: 0 ok/PASS, 1 hypothesis-not-met or FAIL, 2 invalid input,
// 3 resource cap hit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace avf::cli
