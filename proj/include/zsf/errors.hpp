#pragma once

#include <stdexcept>

namespace zsf {

// Raised when a configured node/atom budget or feasibility cap is exceeded.
// Budgets are explicit configuration; nothing is ever truncated silently.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zsf
