#pragma once

#include <stdexcept>
#include <string>

namespace slf {

/// Bad user-facing input: malformed text, wrong determinant, dimension < 3, ...
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal precondition violation (caller bug or algorithm invariant breach).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Column is provably (or at least not certifiably) unimodular.
class not_unimodular_error : public std::runtime_error {
public:
    explicit not_unimodular_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Raised when no rational common zero can be located for a base ring with
/// two or more variables; the guaranteed pipeline covers at most two
/// variables overall.
class unsupported_zero_search : public std::runtime_error {
public:
    explicit unsupported_zero_search(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace slf
