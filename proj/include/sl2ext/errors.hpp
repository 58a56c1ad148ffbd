#ifndef SL2EXT_ERRORS_HPP
#define SL2EXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sl2ext {

// A checked counter left the unsigned 64-bit range. Raised instead of
// wrapping silently; callers map this to a distinct exit code.
struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or table would exceed its configured capacity limit.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Truncation bounds are too small to determine any coefficient of the
// identity under test.
struct truncation_error : std::invalid_argument {
    explicit truncation_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input lies outside the range covered by the implemented reduction
// formulas (e.g. weights with residue p-1).
struct unsupported_error : std::invalid_argument {
    explicit unsupported_error(const std::string& what) : std::invalid_argument(what) {}
};

// A persisted cache file failed structural or invariant validation.
struct cache_error : std::runtime_error {
    explicit cache_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sl2ext

#endif
