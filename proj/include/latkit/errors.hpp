#pragma once

#include <stdexcept>
#include <string>

namespace latkit {

// Malformed or inconsistent user input (bad JSON field, singular basis,
// invalid profile).  Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Requested configuration is valid but not supported by this build
// (e.g. an omega twist over |D_F| > 1 without the data to realize it).
// Also maps to CLI exit code 2.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration work limit exhausted before the requested tolerance was
// certified.  Maps to CLI exit code 3.  Callers that can use a partial
// result catch the derived BudgetExceeded in lattice.hpp.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace latkit
