#pragma once

#include <stdexcept>
#include <string>

namespace treepack {

// Malformed input or a violated precondition. The CLI maps it to exit code 3.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive search ran out of its node budget. Oracles never guess, so
// they raise this instead of returning a partial answer. Exit code 4.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The caller requested a stop through a std::stop_token.
class Cancelled : public std::runtime_error {
public:
    Cancelled() : std::runtime_error("search cancelled") {}
};

}  // namespace treepack
