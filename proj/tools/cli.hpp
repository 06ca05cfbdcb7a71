#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace listcrit::cli {

// Exit codes: 0 pass, 1 violation found, 2 usage or guard error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace listcrit::cli
