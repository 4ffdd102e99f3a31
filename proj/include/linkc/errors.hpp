#ifndef LINKC_ERRORS_HPP
#define LINKC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linkc {

// Bad user input: malformed text, violated preconditions, impossible requests.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A provably-true relation failed at runtime. Always a bug in this library,
// never a property of the input; callers should treat it as fatal.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace linkc

#endif
