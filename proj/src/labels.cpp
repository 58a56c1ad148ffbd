#include "sl2ext/labels.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "sl2ext/checked.hpp"
#include "sl2ext/errors.hpp"

namespace sl2ext {

std::vector<unsigned> Label::exponents(const std::vector<unsigned>& k) const {
    if (k.size() != params.size())
        throw std::invalid_argument("assignment size does not match parameter count");
    std::vector<unsigned> out(offsets.size());
    unsigned running = 0;
    std::size_t next = 0;
    for (std::size_t j = 0; j < offsets.size(); ++j) {
        while (next < params.size() && params[next].start == j) running += k[next++];
        out[j] = offsets[j] + running;
    }
    return out;
}

bool Label::valid(unsigned degree) const noexcept {
    if (offsets.empty() || params.empty()) return false;
    if (params.size() > offsets.size()) return false;
    if (params.front().start != 0) return false;
    for (std::size_t i = 1; i < params.size(); ++i)
        if (params[i].start <= params[i - 1].start) return false;
    if (params.back().start >= offsets.size()) return false;
    for (std::uint8_t a : offsets)
        if (a > degree) return false;
    return true;
}

namespace {

Label rule_a(const Label& src, unsigned degree) {
    Label out;
    out.offsets.reserve(src.offsets.size() + 1);
    out.offsets.push_back(1);
    out.offsets.insert(out.offsets.end(), src.offsets.begin(), src.offsets.end());
    out.params.reserve(src.params.size() + 1);
    out.params.push_back({static_cast<std::uint8_t>(degree), 0});
    for (const auto& q : src.params)
        out.params.push_back({q.name, static_cast<std::uint8_t>(q.start + 1)});
    return out;
}

Label rule_b(const Label& src, unsigned degree) {
    Label out;
    out.offsets.reserve(src.offsets.size() + 1);
    out.offsets.push_back(0);
    for (std::uint8_t a : src.offsets) out.offsets.push_back(static_cast<std::uint8_t>(a + 1));
    out.params.reserve(src.params.size() + 1);
    out.params.push_back({static_cast<std::uint8_t>(degree), 0});
    for (const auto& q : src.params)
        out.params.push_back({q.name, static_cast<std::uint8_t>(q.start + 1)});
    return out;
}

std::vector<Label> base_labels(unsigned degree) {
    if (degree == 0) return {Label{{0}, {{0, 0}}}};
    return {Label{{1}, {{1, 0}}}, Label{{0, 1}, {{1, 0}, {0, 1}}}};
}

} // namespace

namespace {

std::vector<Label> step(const std::vector<Label>& prev2, const std::vector<Label>& prev,
                        unsigned n, std::size_t capacity) {
    const std::size_t next_size = prev.size() + prev2.size();
    if (next_size > capacity)
        throw capacity_error("label list for degree " + std::to_string(n) +
                             " exceeds capacity of " + std::to_string(capacity));
    std::vector<Label> next;
    next.reserve(next_size);
    for (const auto& l : prev2) next.push_back(rule_a(l, n));
    for (const auto& l : prev) next.push_back(rule_b(l, n));
    for (const auto& l : next)
        if (!l.valid(n) || l.params.size() != l.offsets.size())
            throw std::logic_error("label recursion produced an invalid label");
    return next;
}

} // namespace

LabelList build_labels(unsigned degree, std::size_t capacity) {
    if (degree > 250)
        throw std::invalid_argument("label degree exceeds the supported range");
    std::vector<Label> prev2 = base_labels(0);
    if (degree == 0) return {0, std::move(prev2)};
    std::vector<Label> prev = base_labels(1);
    for (unsigned n = 2; n <= degree; ++n) {
        std::vector<Label> next = step(prev2, prev, n, capacity);
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return {degree, std::move(prev)};
}

std::vector<std::uint64_t> built_label_counts(unsigned degree_max, std::size_t capacity) {
    if (degree_max > 250)
        throw std::invalid_argument("label degree exceeds the supported range");
    std::vector<std::uint64_t> counts;
    std::vector<Label> prev2 = base_labels(0);
    counts.push_back(prev2.size());
    if (degree_max == 0) return counts;
    std::vector<Label> prev = base_labels(1);
    counts.push_back(prev.size());
    for (unsigned n = 2; n <= degree_max; ++n) {
        std::vector<Label> next = step(prev2, prev, n, capacity);
        counts.push_back(next.size());
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return counts;
}

std::string to_string(const Label& label) {
    std::ostringstream out;
    out << '(';
    std::size_t next = 0;
    std::string prefix;
    for (std::size_t j = 0; j < label.offsets.size(); ++j) {
        if (j > 0) out << ", ";
        while (next < label.params.size() && label.params[next].start == j) {
            if (!prefix.empty()) prefix += '+';
            prefix += "k_" + std::to_string(label.params[next].name);
            ++next;
        }
        out << prefix;
        if (label.offsets[j] > 0) out << '+' << static_cast<unsigned>(label.offsets[j]);
    }
    out << ')';
    return out.str();
}

namespace {

// power sum of p^{e_j}, capped at limit+1 so callers can prune without
// 64-bit overflow
std::uint64_t capped_power_sum(const std::vector<unsigned>& exps, std::uint64_t p,
                               std::uint64_t limit) {
    std::uint64_t sum = 0;
    for (unsigned e : exps) {
        std::uint64_t pw = 1;
        for (unsigned i = 0; i < e; ++i) {
            if (pw > limit / p) return limit + 1;
            pw *= p;
        }
        if (sum > limit - pw) return limit + 1;
        sum += pw;
    }
    return sum;
}

// Enumerates every parameter assignment whose power sum is <= limit and
// reports each sum. Parameters are assigned outermost first; raising any
// parameter strictly raises the sum, so a prefix whose minimal completion
// already exceeds the limit is cut.
template <typename Fn>
void for_each_solution(const Label& label, std::uint64_t p, std::uint64_t limit, Fn&& fn) {
    const std::size_t n_params = label.params.size();
    std::vector<unsigned> exps(label.offsets.begin(), label.offsets.end());

    auto descend = [&](auto&& self, std::size_t idx) -> void {
        const std::uint64_t base = capped_power_sum(exps, p, limit);
        if (base > limit) return;
        if (idx == n_params) {
            fn(base);
            return;
        }
        const std::size_t start = label.params[idx].start;
        // value 0 first, then raise this parameter until the minimal sum
        // passes the limit
        self(self, idx + 1);
        unsigned raises = 0;
        for (;;) {
            for (std::size_t j = start; j < exps.size(); ++j) ++exps[j];
            ++raises;
            if (capped_power_sum(exps, p, limit) > limit) break;
            self(self, idx + 1);
        }
        for (std::size_t j = start; j < exps.size(); ++j) exps[j] -= raises;
    };
    descend(descend, 0);
}

} // namespace

std::uint64_t label_solutions(const Label& label, PrimeChar pc, std::uint64_t target) {
    if (target == 0) return 0;
    std::uint64_t count = 0;
    for_each_solution(label, pc.value(), target, [&](std::uint64_t sum) {
        if (sum == target) count = add_u64(count, 1);
    });
    return count;
}

std::vector<std::uint64_t> label_solution_histogram(const Label& label, PrimeChar pc,
                                                    std::uint64_t target_max) {
    std::vector<std::uint64_t> hist(target_max + 1, 0);
    for_each_solution(label, pc.value(), target_max, [&](std::uint64_t sum) {
        hist[sum] = add_u64(hist[sum], 1);
    });
    return hist;
}

std::uint64_t ext_dim_via_labels(PrimeChar pc, unsigned degree, std::uint64_t d) {
    if (pc.is_two()) throw std::invalid_argument("label counting requires an odd prime");
    const LabelList list = build_labels(degree);
    std::uint64_t total = 0;
    for (const auto& label : list.labels)
        total = add_u64(total, label_solutions(label, pc, d + 1));
    return total;
}

std::vector<std::uint64_t> ext_dims_via_labels(PrimeChar pc, unsigned degree,
                                               std::uint64_t d_max) {
    if (pc.is_two()) throw std::invalid_argument("label counting requires an odd prime");
    const LabelList list = build_labels(degree);
    std::vector<std::uint64_t> dims(d_max + 1, 0);
    for (const auto& label : list.labels) {
        const auto hist = label_solution_histogram(label, pc, d_max + 1);
        for (std::uint64_t d = 0; d <= d_max; ++d)
            dims[d] = add_u64(dims[d], hist[d + 1]);
    }
    return dims;
}

std::map<unsigned, std::uint64_t> length_spectrum(unsigned degree) {
    std::map<unsigned, std::uint64_t> out;
    for (const auto& label : build_labels(degree).labels) ++out[label.length()];
    return out;
}

Witness witness_weight(unsigned degree, unsigned length, PrimeChar pc) {
    if (pc.is_two()) throw std::invalid_argument("witness weights require an odd prime");
    const LabelList list = build_labels(degree);
    std::vector<const Label*> of_length;
    for (const auto& l : list.labels)
        if (l.length() == length) of_length.push_back(&l);
    if (of_length.empty())
        throw std::invalid_argument("no label of length " + std::to_string(length) +
                                    " in degree " + std::to_string(degree));
    Witness w;
    w.bound = of_length.size();
    w.exponents.resize(length);
    for (unsigned j = 0; j < length; ++j) w.exponents[j] = (j + 1) * (degree + 1);
    for (unsigned b : w.exponents)
        w.power_sum = add_u64(w.power_sum, pow_u64(pc.value(), b));

    // solve each label: the parameter starting at coordinate j must absorb
    // (b_j - a_j) - (b_{j-1} - a_{j-1}), positive because offsets are <= degree
    w.certified = true;
    for (const Label* l : of_length) {
        if (l->params.size() != l->offsets.size()) {
            w.certified = false;
            break;
        }
        std::vector<unsigned> k(l->params.size());
        long prev = 0;
        for (std::size_t j = 0; j < l->offsets.size(); ++j) {
            const long want = static_cast<long>(w.exponents[j]) - l->offsets[j];
            if (want < prev) {
                w.certified = false;
                break;
            }
            k[j] = static_cast<unsigned>(want - prev);
            prev = want;
        }
        if (!w.certified) break;
        std::uint64_t sum = 0;
        for (unsigned e : l->exponents(k)) sum = add_u64(sum, pow_u64(pc.value(), e));
        if (sum != w.power_sum) {
            w.certified = false;
            break;
        }
    }
    return w;
}

} // namespace sl2ext
