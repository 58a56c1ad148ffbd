#ifndef SL2EXT_EXT_POLY_HPP
#define SL2EXT_EXT_POLY_HPP

#include <cstdint>
#include <vector>

#include "sl2ext/checked.hpp"

namespace sl2ext {

/// Polynomial in z with unsigned 64-bit coefficients. Coefficient n holds
/// the dimension of an Ext group in cohomological degree n; the zero
/// polynomial stands for a weight outside the principal block.
class ExtPoly {
public:
    ExtPoly() = default; // zero polynomial

    explicit ExtPoly(std::vector<std::uint64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ExtPoly one() { return ExtPoly(std::vector<std::uint64_t>{1}); }

    bool is_zero() const noexcept { return c_.empty(); }

    /// Degree, or -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

    /// Coefficient of z^n; zero beyond the degree.
    std::uint64_t coeff(std::size_t n) const noexcept { return n < c_.size() ? c_[n] : 0; }

    /// Multiplication by z.
    ExtPoly shifted() const {
        if (is_zero()) return {};
        std::vector<std::uint64_t> out(c_.size() + 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + 1] = c_[i];
        return ExtPoly(std::move(out));
    }

    /// Coefficient-wise checked sum.
    ExtPoly plus(const ExtPoly& other) const {
        std::vector<std::uint64_t> out(std::max(c_.size(), other.c_.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = add_u64(coeff(i), other.coeff(i));
        return ExtPoly(std::move(out));
    }

    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

    bool operator==(const ExtPoly&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<std::uint64_t> c_;
};

} // namespace sl2ext

#endif
