#ifndef SL2EXT_SERIES_HPP
#define SL2EXT_SERIES_HPP

#include <optional>
#include <string>

#include "sl2ext/prime.hpp"
#include "sl2ext/trunc_series.hpp"

namespace sl2ext {

/// Outcome of one coefficient-wise identity check. The checked region is
/// reported explicitly: an identity is only asserted on coefficients fully
/// determined by the retained degrees, never at the truncation boundary.
struct IdentityReport {
    std::string name;
    bool pass = true;
    std::size_t s_checked = 0;              // inclusive s-degree bound of the region
    std::size_t z_checked = 0;              // inclusive z-degree bound of the region
    std::size_t coefficients_checked = 0;

    struct Failure {
        std::size_t s = 0;
        std::size_t z = 0;
        std::int64_t residual = 0;
    };
    std::optional<Failure> first_failure;
    std::string detail; // which sub-identity failed, where applicable
};

/// The generating series of Ext dimensions: coefficient of s^d z^m is
/// dim Ext^m(Delta(0), Delta(2d)), for every prime (the s-exponent is the
/// half-weight d).
TruncSeries dimension_series(PrimeChar p, std::size_t s_max, std::size_t z_max);

/// Checks the self-similar functional equation of the generating series:
///   p = 2:  (1 - z s) G(s) = s G(s^2) + 1
///   p > 2:  (1 - z^2 s^p) G(s) = (1 + z s^{p-1}) + s^{p-1} (1 + z s) G(s^p)
/// PASS iff the residual vanishes for s-degree <= s_max, z-degree <= z_max-2.
IdentityReport check_functional_equation(PrimeChar p, const TruncSeries& g);

/// The p-odd form of the functional equation, which also holds at p = 2
/// (multiply the p = 2 equation by 1 + z s). Exposed as a cross-check.
IdentityReport check_functional_equation_odd_form(PrimeChar p, const TruncSeries& g);

/// p = 2 only. Checks the z-slice recursion g_n(s) - s g_{n-1}(s) = s g_n(s^2)
/// for 1 <= n <= z_max, together with the base identity
/// g_0(s) - s g_0(s^2) = 1.
IdentityReport check_slice_recursion(const TruncSeries& g);

/// p = 2 only. Checks F(s) s G(s) - F(s^2) s^2 G(s^2) = s F(s^2) where F is
/// the product of (1 - z s^{2^k}) over k < factor_count. Requires
/// 2^factor_count > s_max so that the truncated product agrees with the
/// infinite one on all retained degrees.
IdentityReport check_product_identity(const TruncSeries& g, unsigned factor_count);

/// p odd. Checks the closed forms of the first two z-slices of G and the
/// slice recursion for the higher ones:
///   (a) slice 0 equals sum_k s^{p^k - 1};
///   (b) s * slice_1 equals sum_{k1} s^{p^{k1+1}} + sum_{k1,k0} s^{p^{k1}+p^{k1+k0+1}};
///   (c) s h_n(s) - s^p h_n(s^p) = s^{p+1} h_{n-2}(s) + s^{p+1} h_{n-1}(s^p)
///       for 2 <= n <= z_max.
IdentityReport check_odd_slice_identities(PrimeChar p, const TruncSeries& g);

} // namespace sl2ext

#endif
