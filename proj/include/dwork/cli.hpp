#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dwork {

// Full command-line surface; args excludes the program name. Returns the
// process exit code (0 ok, 2 invalid input, 3 condition violated,
// 4 internal consistency, 5 budget exceeded).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dwork
