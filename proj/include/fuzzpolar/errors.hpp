#ifndef FUZZPOLAR_ERRORS_HPP
#define FUZZPOLAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fuzzpolar {

// Malformed values: bad rationals, dimension mismatches, nesting violations.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

// Operations outside the supported envelope: dimension > 4, unbounded
// operands where boundedness is required, oversized grids.
class Unsupported : public std::runtime_error {
public:
    explicit Unsupported(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace fuzzpolar

#endif
