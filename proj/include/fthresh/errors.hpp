#ifndef FTHRESH_ERRORS_HPP
#define FTHRESH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fthresh {

// Violated contract on a caller-supplied value (bad modulus, mismatched
// rings, zero polynomial where a nonzero one is required, ...).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested the order of vanishing of the zero polynomial.
struct ord_of_zero : precondition_error {
    ord_of_zero() : precondition_error("ord of the zero polynomial is undefined") {}
};

// An explicit enumeration or term-count budget was exceeded. The caller
// asked for more than the documented scale; nothing was silently truncated.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text rejected by the polynomial grammar. `position` is a 0-based
// byte offset into the input.
struct parse_error : std::invalid_argument {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Weierstrass preparation requires a y-regular input.
struct not_y_regular : precondition_error {
    not_y_regular()
        : precondition_error(
              "x divides f or f = 0 in the distinguished variable") {}
};

} // namespace fthresh

#endif
