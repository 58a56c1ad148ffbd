#ifndef SL2EXT_TRUNC_SERIES_HPP
#define SL2EXT_TRUNC_SERIES_HPP

#include <cstdint>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "sl2ext/checked.hpp"

namespace sl2ext {

/// Bivariate power series in s and z truncated to s-degree <= s_max and
/// z-degree <= z_max, stored densely. Coefficients are signed so residuals
/// of identity checks can be represented; all arithmetic is checked.
/// Operations never consult dropped degrees: a coefficient of a sum or a
/// product on the retained grid only reads retained coefficients of the
/// operands.
class TruncSeries {
public:
    TruncSeries(std::size_t s_max, std::size_t z_max)
        : s_max_(s_max), z_max_(z_max), c_((s_max + 1) * (z_max + 1), 0) {}

    static TruncSeries constant(std::size_t s_max, std::size_t z_max, std::int64_t v) {
        TruncSeries r(s_max, z_max);
        r.set_coeff(0, 0, v);
        return r;
    }

    std::size_t s_max() const noexcept { return s_max_; }
    std::size_t z_max() const noexcept { return z_max_; }

    std::int64_t coeff(std::size_t d, std::size_t m) const {
        check_index(d, m);
        return c_[d * (z_max_ + 1) + m];
    }
    void set_coeff(std::size_t d, std::size_t m, std::int64_t v) {
        check_index(d, m);
        c_[d * (z_max_ + 1) + m] = v;
    }

    TruncSeries plus(const TruncSeries& o) const;
    TruncSeries minus(const TruncSeries& o) const;

    /// Truncated product; exact on the retained grid whenever both factors
    /// are exact there.
    TruncSeries times(const TruncSeries& o) const;

    /// Multiplication by c * s^ds * z^dz (degrees pushed past the bounds drop).
    TruncSeries times_monomial(std::size_t ds, std::size_t dz, std::int64_t c) const;

    /// The substitution s -> s^q. Coefficient (d, m) of the result equals
    /// coefficient (d/q, m) of the input when q divides d, else 0.
    TruncSeries substitute_power(unsigned q) const;

    bool is_zero() const noexcept;

    std::vector<std::int64_t> z_slice(std::size_t m) const;

    /// CSV dump with columns s_degree,z_degree,coefficient (zeros skipped).
    void dump_csv(std::ostream& out) const;

    bool operator==(const TruncSeries&) const = default;

private:
    void check_index(std::size_t d, std::size_t m) const;

    std::size_t s_max_;
    std::size_t z_max_;
    std::vector<std::int64_t> c_;
};

inline TruncSeries substitute_power(const TruncSeries& f, unsigned q) {
    return f.substitute_power(q);
}

} // namespace sl2ext

#endif
