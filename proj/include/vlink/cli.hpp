#ifndef VLINK_CLI_HPP
#define VLINK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace vlink::cli {

// Exit status contract: 0 = success / affirmative decision,
// 1 = negative decision (invalid, not numberable, not isomorphic,
// inconclusive), 2 = usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vlink::cli

#endif
