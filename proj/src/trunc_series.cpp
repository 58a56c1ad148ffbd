#include "sl2ext/trunc_series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sl2ext {

void TruncSeries::check_index(std::size_t d, std::size_t m) const {
    if (d > s_max_ || m > z_max_)
        throw std::out_of_range("series coefficient outside truncation bounds");
}

namespace {

void require_same_bounds(const TruncSeries& a, const TruncSeries& b) {
    if (a.s_max() != b.s_max() || a.z_max() != b.z_max())
        throw std::invalid_argument("series operands have different truncation bounds");
}

} // namespace

TruncSeries TruncSeries::plus(const TruncSeries& o) const {
    require_same_bounds(*this, o);
    TruncSeries r(s_max_, z_max_);
    for (std::size_t d = 0; d <= s_max_; ++d)
        for (std::size_t m = 0; m <= z_max_; ++m)
            r.set_coeff(d, m, add_i64(coeff(d, m), o.coeff(d, m)));
    return r;
}

TruncSeries TruncSeries::minus(const TruncSeries& o) const {
    require_same_bounds(*this, o);
    TruncSeries r(s_max_, z_max_);
    for (std::size_t d = 0; d <= s_max_; ++d)
        for (std::size_t m = 0; m <= z_max_; ++m)
            r.set_coeff(d, m, sub_i64(coeff(d, m), o.coeff(d, m)));
    return r;
}

TruncSeries TruncSeries::times(const TruncSeries& o) const {
    require_same_bounds(*this, o);
    TruncSeries r(s_max_, z_max_);
    for (std::size_t d1 = 0; d1 <= s_max_; ++d1)
        for (std::size_t m1 = 0; m1 <= z_max_; ++m1) {
            const std::int64_t a = coeff(d1, m1);
            if (a == 0) continue;
            for (std::size_t d2 = 0; d1 + d2 <= s_max_; ++d2)
                for (std::size_t m2 = 0; m1 + m2 <= z_max_; ++m2) {
                    const std::int64_t b = o.coeff(d2, m2);
                    if (b == 0) continue;
                    r.set_coeff(d1 + d2, m1 + m2,
                                add_i64(r.coeff(d1 + d2, m1 + m2), mul_i64(a, b)));
                }
        }
    return r;
}

TruncSeries TruncSeries::times_monomial(std::size_t ds, std::size_t dz, std::int64_t c) const {
    TruncSeries r(s_max_, z_max_);
    if (c == 0) return r;
    for (std::size_t d = 0; d + ds <= s_max_; ++d)
        for (std::size_t m = 0; m + dz <= z_max_; ++m)
            r.set_coeff(d + ds, m + dz, mul_i64(coeff(d, m), c));
    return r;
}

TruncSeries TruncSeries::substitute_power(unsigned q) const {
    if (q < 1) throw std::invalid_argument("substitution power must be >= 1");
    TruncSeries r(s_max_, z_max_);
    for (std::size_t d = 0; d * q <= s_max_; ++d)
        for (std::size_t m = 0; m <= z_max_; ++m)
            r.set_coeff(d * q, m, coeff(d, m));
    return r;
}

bool TruncSeries::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

std::vector<std::int64_t> TruncSeries::z_slice(std::size_t m) const {
    std::vector<std::int64_t> out(s_max_ + 1);
    for (std::size_t d = 0; d <= s_max_; ++d) out[d] = coeff(d, m);
    return out;
}

void TruncSeries::dump_csv(std::ostream& out) const {
    out << "s_degree,z_degree,coefficient\n";
    for (std::size_t d = 0; d <= s_max_; ++d)
        for (std::size_t m = 0; m <= z_max_; ++m)
            if (coeff(d, m) != 0)
                out << d << ',' << m << ',' << coeff(d, m) << '\n';
}

} // namespace sl2ext
