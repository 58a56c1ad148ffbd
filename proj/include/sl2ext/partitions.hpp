#ifndef SL2EXT_PARTITIONS_HPP
#define SL2EXT_PARTITIONS_HPP

#include <cstdint>
#include <vector>

#include "sl2ext/prime.hpp"

namespace sl2ext {

/// A representation N = sum_i 2^{b_i} with weakly decreasing exponents.
struct Expansion {
    std::vector<unsigned> parts; // b_0 >= b_1 >= ... >= b_t >= 0

    unsigned length() const noexcept { return static_cast<unsigned>(parts.size()); }
    std::uint64_t target() const; // checked power sum
    bool weakly_decreasing() const noexcept;
    bool operator==(const Expansion&) const = default;
    auto operator<=>(const Expansion&) const = default;
};

/// The same expansion as runs (c_1^{r_1}, ..., c_w^{r_w}) with strictly
/// decreasing exponents c_i and multiplicities r_i >= 1.
struct RunForm {
    struct Run {
        unsigned exponent = 0;
        unsigned multiplicity = 0;
        bool operator==(const Run&) const = default;
    };
    std::vector<Run> runs;
    bool operator==(const RunForm&) const = default;
};

RunForm to_run_form(const Expansion& e);
Expansion from_run_form(const RunForm& r);

/// Number of weakly decreasing exponent tuples with exactly `parts` parts
/// and power sum `target`. Dynamic program over exponents; the enumerator
/// below is the independent brute-force route.
std::uint64_t count_pow2_partitions(unsigned parts, std::uint64_t target);

/// Bulk variant: one table answering all queries with parts <= parts_max
/// and target <= target_max.
class Pow2PartitionTable {
public:
    Pow2PartitionTable(std::uint64_t target_max, unsigned parts_max);
    std::uint64_t count(unsigned parts, std::uint64_t target) const;
    std::uint64_t target_max() const noexcept { return target_max_; }
    unsigned parts_max() const noexcept { return parts_max_; }

private:
    std::uint64_t target_max_;
    unsigned parts_max_;
    std::vector<std::uint64_t> dp_;
};

/// Complete duplicate-free list of expansions of `target` with exactly
/// `length` parts, in increasing lexicographic order. Throws capacity_error
/// if more than `capacity` expansions would be produced.
std::vector<Expansion> enumerate_expansions(std::uint64_t target, unsigned length,
                                            std::size_t capacity = std::size_t{1} << 22);

/// The length-raising injection: replaces one largest part 2^{b_1} by
/// 2^{b_1 - 1} + 2^{b_1 - 1} and re-sorts. Requires b_1 >= 2. Preserves the
/// power sum and raises the length by exactly one; injective on the set of
/// expansions of a fixed target.
Expansion split_largest_part(const Expansion& e);

struct LowerBoundResult {
    std::uint64_t count = 0;        // expansions of 2^t + 1 with 2t-1 parts
    std::uint64_t reduced_count = 0; // expansions of 2^t with 2t-2 parts
    std::uint64_t bound = 0;        // 2^{t-2}
    bool pass = false;              // count >= bound and count == reduced_count
};

/// Checks that the number of expansions of 2^t + 1 of length 2t - 1 is at
/// least 2^{t-2}, together with its reduction to expansions of 2^t of
/// length 2t - 2. Requires t >= 2.
LowerBoundResult check_lower_bound(unsigned t);

struct StewartResult {
    std::uint64_t lhs = 0; // expansions of 2^m + 1 with m+1 parts
    std::uint64_t rhs = 0; // expansions of 2^m with m parts
    bool pass = false;
};

/// The counting identity relating the two expansion counts above; the
/// common value counts partitions of 1 into m powers of 1/2. Requires m >= 1.
StewartResult stewart_identity(unsigned m);

} // namespace sl2ext

#endif
