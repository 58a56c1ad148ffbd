#ifndef SL2EXT_BIGNAT_HPP
#define SL2EXT_BIGNAT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sl2ext {

/// Arbitrary-precision natural number, just large enough for exact binomial
/// coefficients: multiply/divide by machine words, add, compare, and a
/// floating-point logarithm. Binomials around n = 200 overflow 64-bit
/// counters while their comparisons must stay exact (ties are real), hence
/// exact arithmetic instead of floating point.
class BigNat {
public:
    BigNat() = default; // zero
    explicit BigNat(std::uint64_t v);

    bool is_zero() const noexcept { return limbs_.empty(); }

    void mul_u32(std::uint32_t m);
    /// Exact in-place division; throws std::invalid_argument on a remainder.
    void div_exact_u32(std::uint32_t q);

    BigNat plus(const BigNat& o) const;

    int compare(const BigNat& o) const noexcept;
    bool operator==(const BigNat& o) const noexcept { return limbs_ == o.limbs_; }
    bool operator<(const BigNat& o) const noexcept { return compare(o) < 0; }

    double log2() const; // -inf for zero
    bool fits_u64() const noexcept;
    std::uint64_t to_u64() const; // throws overflow_error if too large
    std::string to_string() const;

private:
    void trim();
    std::vector<std::uint32_t> limbs_; // little-endian base 2^32
};

/// Exact binomial coefficient via the multiplicative formula.
BigNat big_binomial(unsigned n, unsigned k);

} // namespace sl2ext

#endif
