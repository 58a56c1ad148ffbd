#ifndef SL2EXT_LABELS_HPP
#define SL2EXT_LABELS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sl2ext/prime.hpp"

namespace sl2ext {

/// One summand family of the degree-n slice of the generating series, in
/// staircase normal form: coordinate j carries the exponent
///   m_j = a_j + sum of the parameters whose start coordinate is <= j.
/// Parameters are stored outermost first with strictly increasing start
/// coordinates beginning at the first coordinate; the recursion rules
/// produce exactly one parameter start per coordinate.
struct Label {
    struct Param {
        std::uint8_t name = 0;  // display index of the parameter
        std::uint8_t start = 0; // 0-based first coordinate it reaches
        bool operator==(const Param&) const = default;
    };

    std::vector<std::uint8_t> offsets; // a_1 .. a_t
    std::vector<Param> params;

    unsigned length() const noexcept { return static_cast<unsigned>(offsets.size()); }

    /// Coordinate exponents for a concrete parameter assignment.
    std::vector<unsigned> exponents(const std::vector<unsigned>& k) const;

    /// Staircase invariant: starts strictly increasing from coordinate 0,
    /// at most one parameter per coordinate, offsets bounded by the degree.
    bool valid(unsigned degree) const noexcept;

    bool operator==(const Label&) const = default;
};

/// All labels of one degree, in recursion order (images of the degree n-2
/// list first, then images of the degree n-1 list).
struct LabelList {
    unsigned degree = 0;
    std::vector<Label> labels;
};

/// Builds the complete label list for a degree. Base cases: degree 0 is the
/// single length-1 label with offset 0; degree 1 has offsets (1) and (0,1).
/// Rule (a) maps a degree n-2 label (m_1..m_t) to (k+1, k+m_1, ..., k+m_t);
/// rule (b) maps a degree n-1 label (f_1..f_u) to (k, k+f_1+1, ..., k+f_u+1).
/// Throws capacity_error when a list would exceed `capacity`.
LabelList build_labels(unsigned degree, std::size_t capacity = std::size_t{1} << 22);

/// Sizes of the built label lists for every degree 0..degree_max, measured
/// by running the recursion once (not by the Fibonacci recurrence).
std::vector<std::uint64_t> built_label_counts(unsigned degree_max,
                                              std::size_t capacity = std::size_t{1} << 22);

/// k_i shorthand, e.g. "(k_2, k_2+k_1+1, k_2+k_1+k_0+2)".
std::string to_string(const Label& label);

/// Exact number of parameter assignments with sum_j p^{m_j} = target.
/// Depth-first over parameters in staircase order; the partial sum with the
/// remaining parameters at zero is monotone in every parameter, which
/// bounds the search.
std::uint64_t label_solutions(const Label& label, PrimeChar p, std::uint64_t target);

/// Histogram over all targets <= target_max: entry N counts assignments
/// with power sum exactly N.
std::vector<std::uint64_t> label_solution_histogram(const Label& label, PrimeChar p,
                                                    std::uint64_t target_max);

/// dim Ext^n(Delta(0), Delta(2d)) by summing label solution counts at
/// target d+1 over the full degree-n list. Requires p odd.
std::uint64_t ext_dim_via_labels(PrimeChar p, unsigned degree, std::uint64_t d);

/// Bulk variant over all 0 <= d <= d_max.
std::vector<std::uint64_t> ext_dims_via_labels(PrimeChar p, unsigned degree,
                                               std::uint64_t d_max);

/// Histogram of label lengths for one degree.
std::map<unsigned, std::uint64_t> length_spectrum(unsigned degree);

struct Witness {
    std::vector<unsigned> exponents; // b_1 .. b_k
    std::uint64_t power_sum = 0;     // m = sum_j p^{b_j}; the weight is 2(m-1)
    std::uint64_t bound = 0;         // number of degree-n labels of length k
    bool certified = false;          // one explicit solution found per label
};

/// Constructs a weight with dim Ext^n >= (number of length-k labels) by
/// choosing b_j = j*(degree+1): offsets never exceed the degree, so the
/// required parameter jumps stay positive and every length-k label admits a
/// solution hitting the same power sum.
Witness witness_weight(unsigned degree, unsigned length, PrimeChar p);

} // namespace sl2ext

#endif
