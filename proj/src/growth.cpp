#include "sl2ext/growth.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>

#include "sl2ext/checked.hpp"
#include "sl2ext/labels.hpp"
#include "sl2ext/recursion.hpp"

namespace sl2ext {

void growth_report_csv(std::ostream& out, const GrowthReport& r) {
    out << "x,measured,predicted,ratio\n";
    for (const auto& row : r.rows) {
        out << row.x << ',' << row.measured << ',';
        if (row.predicted) out << *row.predicted;
        out << ',';
        if (row.ratio) out << *row.ratio;
        out << '\n';
    }
}

BinomialMax binomial_max(unsigned n) {
    if (n < 2) throw std::invalid_argument("binomial scan requires n >= 2");
    BinomialMax best{0, big_binomial(n, 1)};
    for (unsigned a = 1; a <= n / 2; ++a) {
        BigNat v = big_binomial(n - a, a + 1);
        if (best.value < v) best = {a, std::move(v)}; // ties keep the smaller a
    }
    const double loc = (0.5 - std::sqrt(5.0) / 10.0) * n;
    if (std::abs(static_cast<double>(best.a_star) - std::floor(loc)) > 1.0)
        throw std::logic_error("binomial argmax strayed from its predicted location");
    return best;
}

double growth_constant_closed_form() {
    const double a = 0.5 - std::sqrt(5.0) / 10.0;
    const double abar = 0.5 + std::sqrt(5.0) / 10.0;
    const double c = std::sqrt(5.0) / 5.0;
    return std::exp(abar * std::log(abar) - a * std::log(a) - c * std::log(c));
}

GrowthFit growth_constant_estimate(unsigned n_lo, unsigned n_hi) {
    if (n_lo < 10 || n_hi <= n_lo)
        throw std::invalid_argument("growth fit needs n_hi > n_lo >= 10");
    const double ln2 = std::log(2.0);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const unsigned count = n_hi - n_lo + 1;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
        const double x = n;
        const double y = binomial_max(n).value.log2() * ln2;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    GrowthFit fit;
    fit.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    fit.rate = std::exp(fit.slope);
    return fit;
}

namespace {

std::uint64_t composition_count_rec(std::uint64_t p, unsigned length, std::uint64_t target,
                                    std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t>& memo) {
    if (length == 0) return target == 0 ? 1 : 0;
    if (target == 0) return 0;
    const auto key = std::make_pair(length, target);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::uint64_t pw = 1; pw <= target; pw = (pw > target / p) ? target + 1 : pw * p)
        total = add_u64(total, composition_count_rec(p, length - 1, target - pw, memo));
    memo.emplace(key, total);
    return total;
}

} // namespace

std::uint64_t power_composition_count(PrimeChar pc, unsigned length, std::uint64_t d) {
    if (length < 1) throw std::invalid_argument("composition length must be >= 1");
    std::map<std::pair<unsigned, std::uint64_t>, std::uint64_t> memo;
    return composition_count_rec(pc.value(), length, d + 1, memo);
}

GrowthReport boundedness_scan(PrimeChar p, unsigned degree, std::uint64_t d_max) {
    ExtTable table(p, d_max, degree);
    GrowthReport report;
    report.title = "boundedness-scan";
    std::uint64_t running = 0;
    std::uint64_t last_improvement = 0;
    bool first = true;
    for (std::uint64_t d = 0; d <= d_max; ++d) {
        const std::uint64_t v = table.dim(degree, d);
        if (first || v > running) {
            running = v;
            last_improvement = d;
            report.rows.push_back({d, running, std::nullopt, std::nullopt});
            first = false;
        }
    }
    report.note = "no improvement after d = " + std::to_string(last_improvement);
    return report;
}

GrowthReport fibonacci_check(unsigned n_max) {
    if (n_max < 2) throw std::invalid_argument("fibonacci check requires n_max >= 2");
    GrowthReport report;
    report.title = "fibonacci-label-count";
    const std::vector<std::uint64_t> measured = built_label_counts(n_max);
    std::uint64_t fib_prev = 1, fib = 1; // F_0 = F_1 = 1
    for (unsigned n = 0; n <= n_max; ++n) {
        const std::uint64_t expected = fib; // F_{n+1}
        const std::uint64_t next = add_u64(fib_prev, fib);
        fib_prev = fib;
        fib = next;
        GrowthReport::Row row{n, measured[n], expected, std::nullopt};
        if (n > 0 && measured[n - 1] > 0)
            row.ratio = static_cast<double>(measured[n]) / static_cast<double>(measured[n - 1]);
        if (measured[n] != expected) report.pass = false;
        report.rows.push_back(row);
    }
    report.note = report.pass ? "label counts follow the Fibonacci recurrence"
                              : "label count mismatch";
    return report;
}

} // namespace sl2ext
