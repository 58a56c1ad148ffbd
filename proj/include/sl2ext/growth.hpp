#ifndef SL2EXT_GROWTH_HPP
#define SL2EXT_GROWTH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sl2ext/bignat.hpp"
#include "sl2ext/prime.hpp"

namespace sl2ext {

/// Tabulated measurement rows plus a verdict; rows only, no recomputation.
struct GrowthReport {
    struct Row {
        std::uint64_t x = 0;        // scan coordinate (degree or half-weight)
        std::uint64_t measured = 0;
        std::optional<std::uint64_t> predicted;
        std::optional<double> ratio;
    };
    std::string title;
    std::vector<Row> rows;
    bool pass = true;
    std::string note;
};

void growth_report_csv(std::ostream& out, const GrowthReport& r);

struct BinomialMax {
    unsigned a_star = 0; // argmax over 0 <= a <= n/2, ties toward smaller a
    BigNat value;        // C(n - a*, a* + 1)
};

/// Exact argmax of C(n-a, a+1). Verifies that a* lies within 1 of
/// floor((1/2 - sqrt(5)/10) n) and throws std::logic_error otherwise.
BinomialMax binomial_max(unsigned n);

/// The constant (1/2 + sqrt5/10)^(1/2 + sqrt5/10) /
/// ((1/2 - sqrt5/10)^(1/2 - sqrt5/10) * (sqrt5/5)^(sqrt5/5)), the base of
/// the exponential growth of the maximal binomial. Equals the golden ratio.
double growth_constant_closed_form();

struct GrowthFit {
    double slope = 0; // least-squares slope of log max binomial against n
    double rate = 0;  // exp(slope)
};

/// Fits the growth rate of max_a C(n-a, a+1) over n in [n_lo, n_hi].
/// Requires n_hi > n_lo >= 10.
GrowthFit growth_constant_estimate(unsigned n_lo, unsigned n_hi);

/// Number of ordered tuples (m_1..m_length) of nonnegative exponents with
/// sum_j p^{m_j} = d + 1. Requires length >= 1.
std::uint64_t power_composition_count(PrimeChar p, unsigned length, std::uint64_t d);

/// Running maximum of ext_dim(p, degree, d) over d <= d_max. Rows record
/// each new maximum; the note names the last improvement point. Empirical
/// only: a plateau is evidence of a bound, not a proof of its value.
GrowthReport boundedness_scan(PrimeChar p, unsigned degree, std::uint64_t d_max);

/// Checks that the label count of every degree n <= n_max equals the
/// Fibonacci number F_{n+1} (convention F_0 = F_1 = 1) and records the
/// consecutive ratios. Requires n_max >= 2.
GrowthReport fibonacci_check(unsigned n_max);

} // namespace sl2ext

#endif
