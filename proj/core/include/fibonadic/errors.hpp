#pragma once

#include <stdexcept>
#include <string>

namespace fibonadic {

// A value left the 64-bit working range of the library.
class capacity_error : public std::overflow_error {
public:
    explicit capacity_error(const std::string& what) : std::overflow_error(what) {}
};

// A rewriting loop exceeded its move budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Text input could not be parsed.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A computed object violates an invariant that holds for every valid input.
// Seeing this means a bug in the library, not a bad call.
class structure_error : public std::logic_error {
public:
    explicit structure_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fibonadic
