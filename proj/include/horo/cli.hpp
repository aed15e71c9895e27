// The `horo` command-line front end.
//
// Exit codes: 0 success; 1 malformed input, usage or semantic error;
// 2 invalid fan (validate) or failed contract (lnd-verify); 3 a movability
// decision was inconclusive because the search was truncated.

#ifndef HORO_CLI_HPP
#define HORO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace horo::cli {

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horo::cli

#endif  // HORO_CLI_HPP
