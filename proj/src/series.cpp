#include "sl2ext/series.hpp"

#include <stdexcept>

#include "sl2ext/errors.hpp"
#include "sl2ext/recursion.hpp"

namespace sl2ext {

TruncSeries dimension_series(PrimeChar p, std::size_t s_max, std::size_t z_max) {
    if (s_max < 1 || z_max < 1)
        throw std::invalid_argument("series truncation bounds must be >= 1");
    ExtTable table(p, s_max, static_cast<unsigned>(z_max));
    TruncSeries g(s_max, z_max);
    for (std::size_t d = 0; d <= s_max; ++d)
        for (std::size_t m = 0; m <= z_max; ++m)
            g.set_coeff(d, m, to_i64(table.dim(static_cast<unsigned>(m), d)));
    return g;
}

namespace {

struct RegionChecker {
    IdentityReport report;

    explicit RegionChecker(std::string name, std::size_t s_bound, std::size_t z_bound) {
        report.name = std::move(name);
        report.s_checked = s_bound;
        report.z_checked = z_bound;
    }

    void record(std::size_t d, std::size_t m, std::int64_t residual, const char* part = nullptr) {
        ++report.coefficients_checked;
        if (residual != 0 && report.pass) {
            report.pass = false;
            report.first_failure = IdentityReport::Failure{d, m, residual};
            if (part) report.detail = part;
        }
    }
};

// safe lookup treating out-of-grid low indices as unreachable
std::int64_t g_at(const TruncSeries& g, std::size_t d, std::size_t m) { return g.coeff(d, m); }

} // namespace

IdentityReport check_functional_equation(PrimeChar pc, const TruncSeries& g) {
    const std::size_t s_max = g.s_max(), z_max = g.z_max();
    if (z_max < 2 || s_max < pc.value())
        throw truncation_error("series bounds too small to determine any coefficient");
    const std::size_t z_bound = z_max - 2;
    if (pc.is_two()) {
        RegionChecker chk("functional-equation", s_max, z_bound);
        for (std::size_t d = 0; d <= s_max; ++d)
            for (std::size_t m = 0; m <= z_bound; ++m) {
                // (1 - zs) G  -  (s G(s^2) + 1)
                std::int64_t lhs = g_at(g, d, m);
                if (d >= 1 && m >= 1) lhs = sub_i64(lhs, g_at(g, d - 1, m - 1));
                std::int64_t rhs = (d == 0 && m == 0) ? 1 : 0;
                if (d % 2 == 1) rhs = add_i64(rhs, g_at(g, (d - 1) / 2, m));
                chk.record(d, m, sub_i64(lhs, rhs));
            }
        return chk.report;
    }
    return check_functional_equation_odd_form(pc, g);
}

IdentityReport check_functional_equation_odd_form(PrimeChar pc, const TruncSeries& g) {
    const std::size_t s_max = g.s_max(), z_max = g.z_max();
    const std::size_t p = pc.value();
    if (z_max < 2 || s_max < p)
        throw truncation_error("series bounds too small to determine any coefficient");
    const std::size_t z_bound = z_max - 2;
    RegionChecker chk("functional-equation", s_max, z_bound);
    for (std::size_t d = 0; d <= s_max; ++d)
        for (std::size_t m = 0; m <= z_bound; ++m) {
            // (1 - z^2 s^p) G  -  (1 + z s^{p-1})  -  s^{p-1} (1 + z s) G(s^p)
            std::int64_t lhs = g_at(g, d, m);
            if (d >= p && m >= 2) lhs = sub_i64(lhs, g_at(g, d - p, m - 2));
            std::int64_t rhs = 0;
            if (d == 0 && m == 0) rhs = 1;
            if (d == p - 1 && m == 1) rhs = add_i64(rhs, 1);
            if (d >= p - 1 && (d - (p - 1)) % p == 0)
                rhs = add_i64(rhs, g_at(g, (d - (p - 1)) / p, m));
            if (m >= 1 && d >= p && (d - p) % p == 0)
                rhs = add_i64(rhs, g_at(g, (d - p) / p, m - 1));
            chk.record(d, m, sub_i64(lhs, rhs));
        }
    return chk.report;
}

IdentityReport check_slice_recursion(const TruncSeries& g) {
    const std::size_t s_max = g.s_max(), z_max = g.z_max();
    if (z_max < 1 || s_max < 1)
        throw truncation_error("series bounds too small to determine any coefficient");
    RegionChecker chk("slice-recursion", s_max, z_max);
    // base slice: g_0(s) - s g_0(s^2) = 1
    for (std::size_t d = 0; d <= s_max; ++d) {
        std::int64_t lhs = g_at(g, d, 0);
        if (d % 2 == 1) lhs = sub_i64(lhs, g_at(g, (d - 1) / 2, 0));
        chk.record(d, 0, sub_i64(lhs, d == 0 ? 1 : 0), "base slice");
    }
    for (std::size_t n = 1; n <= z_max; ++n)
        for (std::size_t d = 0; d <= s_max; ++d) {
            // g_n(s) - s g_{n-1}(s) - s g_n(s^2)
            std::int64_t r = g_at(g, d, n);
            if (d >= 1) r = sub_i64(r, g_at(g, d - 1, n - 1));
            if (d % 2 == 1) r = sub_i64(r, g_at(g, (d - 1) / 2, n));
            chk.record(d, n, r, "slice recursion");
        }
    return chk.report;
}

IdentityReport check_product_identity(const TruncSeries& g, unsigned factor_count) {
    const std::size_t s_max = g.s_max(), z_max = g.z_max();
    if (factor_count >= 63 || (std::uint64_t{1} << factor_count) <= s_max)
        throw truncation_error("product needs 2^factor_count > s_max to equal the "
                               "infinite product on retained degrees");
    // F(s) = prod_{k < factor_count} (1 - z s^{2^k}), truncated
    TruncSeries f = TruncSeries::constant(s_max, z_max, 1);
    for (unsigned k = 0; k < factor_count; ++k) {
        const std::uint64_t step = std::uint64_t{1} << k;
        if (step > s_max) break; // further factors are identity on the grid
        TruncSeries factor = TruncSeries::constant(s_max, z_max, 1);
        if (z_max >= 1) factor.set_coeff(static_cast<std::size_t>(step), 1, -1);
        f = f.times(factor);
    }
    const TruncSeries f2 = f.substitute_power(2);
    const TruncSeries g2 = g.substitute_power(2);
    const TruncSeries lhs = f.times(g.times_monomial(1, 0, 1))
                                .minus(f2.times(g2.times_monomial(2, 0, 1)));
    const TruncSeries rhs = f2.times_monomial(1, 0, 1);
    const TruncSeries residual = lhs.minus(rhs);
    RegionChecker chk("product-identity", s_max, z_max);
    for (std::size_t d = 0; d <= s_max; ++d)
        for (std::size_t m = 0; m <= z_max; ++m) chk.record(d, m, residual.coeff(d, m));
    return chk.report;
}

namespace {

// number of representations of target as p^{e+1}, e >= 0
std::int64_t count_single_power(std::uint64_t p, std::uint64_t target) {
    std::uint64_t v = p;
    while (v < target) {
        if (v > target / p) return 0;
        v *= p;
    }
    return v == target ? 1 : 0;
}

// number of pairs (k1, k0) >= 0 with p^{k1} + p^{k1+k0+1} = target
std::int64_t count_power_pairs(std::uint64_t p, std::uint64_t target) {
    std::int64_t count = 0;
    for (std::uint64_t low = 1; low < target; low = (low > target / p) ? target : low * p) {
        const std::uint64_t rest = target - low;
        // rest must be low * p^{k0+1}
        if (rest % low != 0) continue;
        std::uint64_t q = rest / low;
        bool power = q >= p;
        while (power && q % p == 0) q /= p;
        if (power && q == 1) ++count;
    }
    return count;
}

} // namespace

IdentityReport check_odd_slice_identities(PrimeChar pc, const TruncSeries& g) {
    const std::size_t s_max = g.s_max(), z_max = g.z_max();
    const std::uint64_t p = pc.value();
    if (pc.is_two()) throw std::invalid_argument("slice closed forms require an odd prime");
    if (z_max < 1 || s_max < p)
        throw truncation_error("series bounds too small to determine any coefficient");
    RegionChecker chk("odd-slice-identities", s_max, z_max);
    // (a) slice 0: coefficient at s^d is 1 iff d+1 is a power of p
    for (std::size_t d = 0; d <= s_max; ++d) {
        std::uint64_t x = d + 1;
        while (x % p == 0) x /= p;
        chk.record(d, 0, sub_i64(g_at(g, d, 0), x == 1 ? 1 : 0), "slice 0 closed form");
    }
    // (b) s * slice_1 by direct summation of the two power families
    if (z_max >= 1)
        for (std::size_t t = 1; t <= s_max; ++t) {
            const std::int64_t expected =
                add_i64(count_single_power(p, t), count_power_pairs(p, t));
            chk.record(t, 1, sub_i64(g_at(g, t - 1, 1), expected), "slice 1 closed form");
        }
    // (c) s h_n(s) - s^p h_n(s^p) = s^{p+1} h_{n-2}(s) + s^{p+1} h_{n-1}(s^p)
    for (std::size_t n = 2; n <= z_max; ++n)
        for (std::size_t t = 0; t <= s_max; ++t) {
            std::int64_t lhs = (t >= 1) ? g_at(g, t - 1, n) : 0;
            if (t >= p && t % p == 0) lhs = sub_i64(lhs, g_at(g, t / p - 1, n));
            std::int64_t rhs = (t >= p + 1) ? g_at(g, t - p - 1, n - 2) : 0;
            if (t >= p + 1 && (t - p - 1) % p == 0)
                rhs = add_i64(rhs, g_at(g, (t - p - 1) / p, n - 1));
            chk.record(t, n, sub_i64(lhs, rhs), "slice recursion");
        }
    return chk.report;
}

} // namespace sl2ext
