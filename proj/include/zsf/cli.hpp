#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zsf {

// Exit status: 0 success, 1 verification failure, 2 usage error, 3 budget/cap.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zsf
