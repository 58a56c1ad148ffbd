#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "sl2ext/errors.hpp"
#include "sl2ext/labels.hpp"
#include "sl2ext/recursion.hpp"

#include "test_util.hpp"

using namespace sl2ext;

namespace {
const PrimeChar p3{3}, p5{5};

std::vector<std::string> printed(unsigned degree) {
    std::vector<std::string> out;
    for (const auto& l : build_labels(degree).labels) out.push_back(to_string(l));
    return out;
}
} // namespace

TEST_CASE("base lists and the first recursion steps print the known shorthand") {
    CHECK(printed(0) == std::vector<std::string>{"(k_0)"});
    CHECK(printed(1) == std::vector<std::string>{"(k_1+1)", "(k_1, k_1+k_0+1)"});
    CHECK(printed(2) == std::vector<std::string>{"(k_2+1, k_2+k_0)", "(k_2, k_2+k_1+2)",
                                                 "(k_2, k_2+k_1+1, k_2+k_1+k_0+2)"});
    CHECK(printed(3) ==
          std::vector<std::string>{"(k_3+1, k_3+k_1+1)", "(k_3+1, k_3+k_1, k_3+k_1+k_0+1)",
                                   "(k_3, k_3+k_2+2, k_3+k_2+k_0+1)",
                                   "(k_3, k_3+k_2+1, k_3+k_2+k_1+3)",
                                   "(k_3, k_3+k_2+1, k_3+k_2+k_1+2, k_3+k_2+k_1+k_0+3)"});
}

TEST_CASE("degree-3 offset vectors") {
    const LabelList list = build_labels(3);
    REQUIRE(list.labels.size() == 5);
    const std::vector<std::vector<std::uint8_t>> offsets = {
        {1, 1}, {1, 0, 1}, {0, 2, 1}, {0, 1, 3}, {0, 1, 2, 3}};
    for (std::size_t i = 0; i < 5; ++i) CHECK(list.labels[i].offsets == offsets[i]);
}

TEST_CASE("every built label is in staircase normal form") {
    for (unsigned n = 0; n <= 12; ++n)
        for (const auto& l : build_labels(n).labels) {
            CHECK(l.valid(n));
            CHECK(l.params.size() == l.length());
            CHECK(l.params.front().name == (n == 0 ? 0 : n));
        }
}

TEST_CASE("label counts follow the Fibonacci sequence") {
    const auto counts = built_label_counts(25);
    for (unsigned n = 0; n <= 25; ++n) CHECK(counts[n] == oracle::fibonacci(n + 1));
    CHECK(counts[3] == 5);
    CHECK(counts[1] == 2);
    CHECK(counts[25] == 196418);
}

TEST_CASE("build capacity is enforced") {
    CHECK_THROWS_AS(build_labels(40, 1000), capacity_error);
    CHECK_THROWS_AS(build_labels(251), std::invalid_argument);
}

TEST_CASE("length spectra") {
    // lengths of the three degree-2 labels are 2, 2, 3
    const auto s2 = length_spectrum(2);
    CHECK(s2 == std::map<unsigned, std::uint64_t>{{2, 2}, {3, 1}});
    const auto s3 = length_spectrum(3);
    CHECK(s3 == std::map<unsigned, std::uint64_t>{{2, 1}, {3, 3}, {4, 1}});
    CHECK(length_spectrum(0) == std::map<unsigned, std::uint64_t>{{1, 1}});

    // support is an interval [floor(n/2)+1, n+1] and the count at length
    // len is C(len, n+1-len)
    for (unsigned n = 1; n <= 14; ++n) {
        const auto spec = length_spectrum(n);
        CHECK(spec.begin()->first == n / 2 + 1);
        CHECK(spec.rbegin()->first == n + 1);
        CHECK(spec.rbegin()->second == 1);
        std::uint64_t total = 0;
        for (const auto& [len, count] : spec) {
            std::uint64_t binom = 1; // C(len, n+1-len) via the product formula
            const unsigned k = n + 1 - len;
            REQUIRE(k <= len);
            for (unsigned i = 1; i <= k; ++i) binom = binom * (len - k + i) / i;
            CHECK(count == binom);
            total += count;
        }
        CHECK(total == oracle::fibonacci(n + 1));
    }
}

TEST_CASE("solution counting examples") {
    const Label single{{0}, {{0, 0}}}; // (k_0)
    CHECK(label_solutions(single, p3, 9) == 1);
    CHECK(label_solutions(single, p3, 5) == 0);

    const Label pair{{0, 1}, {{1, 0}, {0, 1}}}; // (k_1, k_1+k_0+1)
    CHECK(label_solutions(pair, p3, 4) == 1);

    // degree-3 labels at target 39 contribute (0, 2, 1, 0, 0)
    const LabelList list = build_labels(3);
    const std::vector<std::uint64_t> expected = {0, 2, 1, 0, 0};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(label_solutions(list.labels[i], p3, 39) == expected[i]);
}

TEST_CASE("histograms agree with pointwise counts") {
    for (const auto& label : build_labels(4).labels) {
        const auto hist = label_solution_histogram(label, p3, 500);
        for (std::uint64_t target = 1; target <= 500; target += 13)
            CHECK(hist[target] == label_solutions(label, p3, target));
    }
}

TEST_CASE("dimensions via labels match the recursion") {
    CHECK(ext_dim_via_labels(p3, 3, 38) == 3);
    CHECK(ext_dim_via_labels(p3, 0, 8) == 1);
    CHECK_THROWS_AS(ext_dim_via_labels(PrimeChar(2), 1, 3), std::invalid_argument);

    for (auto p : {p3, p5}) {
        ExtTable table(p, 300, 5);
        for (unsigned n = 0; n <= 5; ++n) {
            const auto dims = ext_dims_via_labels(p, n, 300);
            for (std::uint64_t d = 0; d <= 300; ++d) {
                CHECK(dims[d] == table.dim(n, d));
                if (classify_block(p, 2 * d) == BlockClass::out_of_block)
                    CHECK(dims[d] == 0);
            }
        }
    }
}

TEST_CASE("witness weights certify the label-count lower bound") {
    const Witness w = witness_weight(3, 3, p3);
    CHECK(w.bound == 3);
    CHECK(w.exponents == std::vector<unsigned>{4, 8, 12});
    CHECK(w.power_sum == 81 + 6561 + 531441);
    CHECK(w.certified);
    CHECK(ext_dim_via_labels(p3, 3, w.power_sum - 1) >= w.bound);
    // the recursion confirms the exact value here
    CHECK(ext_dim(p3, 3, w.power_sum - 1) == 3);

    const Witness w0 = witness_weight(0, 1, p3);
    CHECK(w0.bound == 1);
    CHECK(w0.power_sum == 3);
    CHECK(w0.certified);
    CHECK(ext_dim(p3, 0, w0.power_sum - 1) == 1);

    CHECK_THROWS_AS(witness_weight(3, 1, p3), std::invalid_argument); // no length-1 label
    CHECK_THROWS_AS(witness_weight(9, 10, PrimeChar(97)), overflow_error);
}

TEST_CASE("witnesses exist for every realized length in low degrees") {
    // the witness power sum is about p^{k(n+1)}, so 64-bit exactness caps
    // the degree at 5 for p = 3 and 4 for p = 5
    for (unsigned n = 0; n <= 5; ++n)
        for (const auto& [len, count] : length_spectrum(n)) {
            const Witness w = witness_weight(n, len, p3);
            CHECK(w.certified);
            CHECK(w.bound == count);
            CHECK(ext_dim_via_labels(p3, n, w.power_sum - 1) >= w.bound);
        }
    for (unsigned n = 0; n <= 4; ++n)
        for (const auto& [len, count] : length_spectrum(n)) {
            const Witness w = witness_weight(n, len, p5);
            CHECK(w.certified);
            CHECK(ext_dim_via_labels(p5, n, w.power_sum - 1) >= w.bound);
        }
}
