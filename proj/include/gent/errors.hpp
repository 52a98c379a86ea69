#ifndef GENT_ERRORS_HPP
#define GENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gent {

// Malformed input text (DIMACS, distribution files, point files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition on arguments was violated (out-of-range vertex, bad family
// name, dimension mismatch, non-bipartite input where bipartite is required).
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An enumeration cap was exceeded. Caps are configuration values; exceeding
// one is an error, never a silent truncation.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gent

#endif
