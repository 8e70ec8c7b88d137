#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tc {

// Full command-line driver, callable in-process (tests run it against
// string streams).  Returns the exit code: 0 success, 1 for a clean run
// whose answer is negative (no witness, failed checks), 2 for bad input.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tc
