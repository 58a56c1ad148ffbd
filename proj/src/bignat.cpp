#include "sl2ext/bignat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sl2ext/errors.hpp"

namespace sl2ext {

BigNat::BigNat(std::uint64_t v) {
    if (v) limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

void BigNat::mul_u32(std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        const std::uint64_t prod = std::uint64_t{limb} * m + carry;
        limb = static_cast<std::uint32_t>(prod);
        carry = prod >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    trim();
}

void BigNat::div_exact_u32(std::uint32_t q) {
    if (q == 0) throw std::invalid_argument("division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        const std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / q);
        rem = cur % q;
    }
    if (rem != 0) throw std::invalid_argument("inexact division in big natural");
    trim();
}

BigNat BigNat::plus(const BigNat& o) const {
    BigNat out;
    const std::size_t n = std::max(limbs_.size(), o.limbs_.size());
    out.limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t a = i < limbs_.size() ? limbs_[i] : 0;
        const std::uint64_t b = i < o.limbs_.size() ? o.limbs_[i] : 0;
        const std::uint64_t sum = a + b + carry;
        out.limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) out.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

int BigNat::compare(const BigNat& o) const noexcept {
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

double BigNat::log2() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    // top three limbs give a 96-bit mantissa, plenty for a double
    double top = 0;
    const std::size_t n = limbs_.size();
    const std::size_t used = std::min<std::size_t>(n, 3);
    for (std::size_t i = 0; i < used; ++i)
        top = top * 4294967296.0 + limbs_[n - 1 - i];
    return std::log2(top) + 32.0 * static_cast<double>(n - used);
}

bool BigNat::fits_u64() const noexcept { return limbs_.size() <= 2; }

std::uint64_t BigNat::to_u64() const {
    if (!fits_u64()) throw overflow_error("big natural exceeds 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = std::uint64_t{limbs_[1]} << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigNat::to_string() const {
    if (is_zero()) return "0";
    BigNat tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint64_t rem = 0;
        for (std::size_t i = tmp.limbs_.size(); i-- > 0;) {
            const std::uint64_t cur = (rem << 32) | tmp.limbs_[i];
            tmp.limbs_[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        tmp.trim();
        std::string chunk = std::to_string(rem);
        if (!tmp.is_zero()) chunk.insert(0, 9 - chunk.size(), '0');
        out.insert(0, chunk);
    }
    return out;
}

BigNat big_binomial(unsigned n, unsigned k) {
    if (k > n) return BigNat{};
    if (k > n - k) k = n - k;
    BigNat out(1);
    for (unsigned i = 1; i <= k; ++i) {
        out.mul_u32(n - k + i);
        out.div_exact_u32(i); // each prefix product C(n-k+i, i) is integral
    }
    return out;
}

} // namespace sl2ext
