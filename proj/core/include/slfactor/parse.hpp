#pragma once

#include <string>

#include "slfactor/poly.hpp"

namespace slf {

/// Parse error with a character position, for CLI diagnostics.
class parse_error : public input_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : input_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Grammar: rationals ("-3/2"), variables (identifiers), + - * ^ and
/// parentheses; whitespace insignificant. Every identifier must name a ring
/// variable.
Poly parse_poly(const std::string& text, const RingPtr& ring);

} // namespace slf
