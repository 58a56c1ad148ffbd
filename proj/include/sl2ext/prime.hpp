#ifndef SL2EXT_PRIME_HPP
#define SL2EXT_PRIME_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sl2ext {

/// Deterministic primality check by trial division.
inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

/// The characteristic of the ground field. Validated at construction so
/// every downstream computation may assume primality.
class PrimeChar {
public:
    explicit PrimeChar(std::uint64_t p) : p_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
    }
    std::uint64_t value() const noexcept { return p_; }
    bool is_two() const noexcept { return p_ == 2; }
    bool operator==(const PrimeChar&) const = default;

private:
    std::uint64_t p_;
};

/// An even dominant weight 2d together with its half d.
struct EvenWeight {
    std::uint64_t value = 0; // 2d
    std::uint64_t half = 0;  // d

    static EvenWeight of_weight(std::uint64_t w) {
        if (w % 2 != 0)
            throw std::invalid_argument("weight must be even, got " + std::to_string(w));
        return EvenWeight{w, w / 2};
    }
    static EvenWeight of_half(std::uint64_t d) { return EvenWeight{2 * d, d}; }
};

} // namespace sl2ext

#endif
