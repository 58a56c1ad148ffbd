#ifndef SL2EXT_CHECKED_HPP
#define SL2EXT_CHECKED_HPP

#include <cstdint>
#include <limits>

#include "sl2ext/errors.hpp"

namespace sl2ext {

inline std::uint64_t add_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("64-bit counter addition overflowed");
    return r;
}

inline std::uint64_t mul_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("64-bit counter multiplication overflowed");
    return r;
}

inline std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r = mul_u64(r, base);
    return r;
}

inline std::int64_t add_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("64-bit signed addition overflowed");
    return r;
}

inline std::int64_t sub_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw overflow_error("64-bit signed subtraction overflowed");
    return r;
}

inline std::int64_t mul_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("64-bit signed multiplication overflowed");
    return r;
}

inline std::int64_t to_i64(std::uint64_t v) {
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw overflow_error("unsigned counter does not fit a signed 64-bit value");
    return static_cast<std::int64_t>(v);
}

} // namespace sl2ext

#endif
