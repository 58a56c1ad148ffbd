#include "sl2ext/partitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "sl2ext/checked.hpp"
#include "sl2ext/errors.hpp"

namespace sl2ext {

std::uint64_t Expansion::target() const {
    std::uint64_t sum = 0;
    for (unsigned b : parts) {
        if (b >= 64) throw overflow_error("expansion exponent too large for 64-bit sums");
        sum = add_u64(sum, std::uint64_t{1} << b);
    }
    return sum;
}

bool Expansion::weakly_decreasing() const noexcept {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) return false;
    return true;
}

RunForm to_run_form(const Expansion& e) {
    if (!e.weakly_decreasing())
        throw std::invalid_argument("expansion parts must be weakly decreasing");
    RunForm out;
    for (unsigned b : e.parts) {
        if (!out.runs.empty() && out.runs.back().exponent == b)
            ++out.runs.back().multiplicity;
        else
            out.runs.push_back({b, 1});
    }
    return out;
}

Expansion from_run_form(const RunForm& r) {
    Expansion out;
    for (const auto& run : r.runs)
        out.parts.insert(out.parts.end(), run.multiplicity, run.exponent);
    if (!out.weakly_decreasing())
        throw std::invalid_argument("run exponents must be strictly decreasing");
    return out;
}

Pow2PartitionTable::Pow2PartitionTable(std::uint64_t target_max, unsigned parts_max)
    : target_max_(target_max), parts_max_(parts_max) {
    const std::uint64_t width = parts_max + std::uint64_t{1};
    dp_.assign(mul_u64(target_max + 1, width), 0);
    dp_[0] = 1; // zero parts, zero target
    // coin-change with a part counter; ascending n makes each power reusable
    for (unsigned e = 0; (std::uint64_t{1} << e) <= target_max && e < 64; ++e) {
        const std::uint64_t pw = std::uint64_t{1} << e;
        for (std::uint64_t n = pw; n <= target_max; ++n)
            for (unsigned t = 1; t <= parts_max; ++t) {
                const std::uint64_t add = dp_[(n - pw) * width + (t - 1)];
                if (add) dp_[n * width + t] = add_u64(dp_[n * width + t], add);
            }
    }
}

std::uint64_t Pow2PartitionTable::count(unsigned parts, std::uint64_t target) const {
    if (target > target_max_ || parts > parts_max_)
        throw std::out_of_range("partition count query outside built bounds");
    return dp_[target * (parts_max_ + std::uint64_t{1}) + parts];
}

std::uint64_t count_pow2_partitions(unsigned parts, std::uint64_t target) {
    if (target == 0) return parts == 0 ? 1 : 0;
    return Pow2PartitionTable(target, parts).count(parts, target);
}

namespace {

void enumerate_rec(std::uint64_t remaining, unsigned parts_left, unsigned max_exp,
                   std::vector<unsigned>& current, std::vector<Expansion>& out,
                   std::size_t capacity) {
    if (parts_left == 0) {
        if (remaining == 0) {
            if (out.size() >= capacity)
                throw capacity_error("expansion enumeration exceeded capacity of " +
                                     std::to_string(capacity));
            out.push_back(Expansion{current});
        }
        return;
    }
    if (remaining < parts_left) return; // each part contributes at least 1
    if ((remaining >> max_exp) > parts_left) return; // even max parts fall short
    for (unsigned e = 0; e <= max_exp; ++e) {
        const std::uint64_t pw = std::uint64_t{1} << e;
        if (pw > remaining || remaining - pw < parts_left - 1u) break;
        current.push_back(e);
        enumerate_rec(remaining - pw, parts_left - 1, e, current, out, capacity);
        current.pop_back();
    }
}

} // namespace

std::vector<Expansion> enumerate_expansions(std::uint64_t target, unsigned length,
                                            std::size_t capacity) {
    std::vector<Expansion> out;
    if (target == 0) return out;
    unsigned max_exp = 0;
    while ((std::uint64_t{1} << (max_exp + 1)) <= target && max_exp < 62) ++max_exp;
    std::vector<unsigned> current;
    current.reserve(length);
    // descending caps keep every emitted tuple weakly decreasing, and the
    // ascending loop at each level yields increasing lexicographic order
    enumerate_rec(target, length, max_exp, current, out, capacity);
    return out;
}

Expansion split_largest_part(const Expansion& e) {
    if (!e.weakly_decreasing())
        throw std::invalid_argument("expansion parts must be weakly decreasing");
    if (e.parts.empty() || e.parts.front() < 2)
        throw std::invalid_argument("split requires the largest exponent to be >= 2");
    Expansion out = e;
    const unsigned b1 = out.parts.front();
    out.parts.front() = b1 - 1;
    out.parts.insert(out.parts.begin() + 1, b1 - 1);
    // already sorted: b1-1 >= every remaining part minus... re-sort to be canonical
    std::sort(out.parts.begin(), out.parts.end(), std::greater<unsigned>());
    return out;
}

LowerBoundResult check_lower_bound(unsigned t) {
    if (t < 2) throw std::invalid_argument("lower-bound check requires t >= 2");
    if (t >= 62) throw overflow_error("2^t does not fit a 64-bit counter");
    LowerBoundResult res;
    const std::uint64_t pow_t = std::uint64_t{1} << t;
    res.count = count_pow2_partitions(2 * t - 1, pow_t + 1);
    res.reduced_count = count_pow2_partitions(2 * t - 2, pow_t);
    res.bound = std::uint64_t{1} << (t - 2);
    res.pass = res.count >= res.bound && res.count == res.reduced_count;
    return res;
}

StewartResult stewart_identity(unsigned m) {
    if (m < 1) throw std::invalid_argument("identity requires m >= 1");
    if (m >= 62) throw overflow_error("2^m does not fit a 64-bit counter");
    StewartResult res;
    const std::uint64_t pow_m = std::uint64_t{1} << m;
    res.lhs = count_pow2_partitions(m + 1, pow_m + 1);
    res.rhs = count_pow2_partitions(m, pow_m);
    res.pass = res.lhs == res.rhs;
    return res;
}

} // namespace sl2ext
