#include "sl2ext/recursion.hpp"

#include <fstream>
#include <mutex>
#include <sstream>
#include <stack>

#include "json.hpp"

#include "sl2ext/errors.hpp"

namespace sl2ext {

BlockClass classify_block(PrimeChar p, std::uint64_t weight) {
    if (weight % 2 != 0) return BlockClass::out_of_block;
    const std::uint64_t period = 2 * p.value();
    const std::uint64_t r = weight % period;
    if (r == 0) return BlockClass::zero_residue;
    if (r == period - 2 && weight > 0) return BlockClass::minus_two_residue;
    return BlockClass::out_of_block;
}

namespace {

// One step of the dimension recursion in half-weight coordinates:
//   eps(2d) = z * eps(2 shift_dep)            (shift)
//   eps(2d) = z * eps(2 shift_dep) + eps(2 add_dep)   (shift_plus)
struct Rule {
    enum Kind { base_one, zero, shift, shift_plus } kind;
    std::uint64_t shift_dep = 0;
    std::uint64_t add_dep = 0;
};

Rule rule_for(std::uint64_t p, std::uint64_t d) {
    if (d == 0) return {Rule::base_one};
    if (p == 2) {
        if (d % 2 == 0) return {Rule::shift, d - 1};
        return {Rule::shift_plus, d - 1, (d - 1) / 2};
    }
    if (d % p == 0) return {Rule::shift, d - 1};
    if ((d + 1) % p == 0) {
        const std::uint64_t k = (d + 1) / p;
        return {Rule::shift_plus, (k - 1) * p, k - 1};
    }
    return {Rule::zero};
}

// eps(2(p-1)) must come out as 1 + z; the value is derived, not seeded.
void check_odd_base(std::uint64_t p, std::uint64_t d, const ExtPoly& value) {
    if (p > 2 && d == p - 1) {
        if (value.coeffs() != std::vector<std::uint64_t>{1, 1})
            throw std::logic_error("recursion self-check failed: eps(2p-2) != 1+z");
    }
}

} // namespace

void DimCache::compute_locked(std::uint64_t p, std::uint64_t d) {
    std::stack<std::uint64_t> work;
    work.push(d);
    while (!work.empty()) {
        const std::uint64_t cur = work.top();
        if (memo_.count({p, cur})) {
            work.pop();
            continue;
        }
        const Rule r = rule_for(p, cur);
        switch (r.kind) {
        case Rule::base_one:
            memo_.emplace(Key{p, cur}, ExtPoly::one());
            work.pop();
            break;
        case Rule::zero:
            memo_.emplace(Key{p, cur}, ExtPoly{});
            work.pop();
            break;
        case Rule::shift: {
            auto it = memo_.find({p, r.shift_dep});
            if (it == memo_.end()) {
                work.push(r.shift_dep);
                break;
            }
            ExtPoly val = it->second.shifted();
            check_odd_base(p, cur, val);
            memo_.emplace(Key{p, cur}, std::move(val));
            work.pop();
            break;
        }
        case Rule::shift_plus: {
            auto a = memo_.find({p, r.shift_dep});
            auto b = memo_.find({p, r.add_dep});
            bool ready = true;
            if (a == memo_.end()) {
                work.push(r.shift_dep);
                ready = false;
            }
            if (b == memo_.end()) {
                work.push(r.add_dep);
                ready = false;
            }
            if (!ready) break;
            ExtPoly val = a->second.shifted().plus(b->second);
            check_odd_base(p, cur, val);
            memo_.emplace(Key{p, cur}, std::move(val));
            work.pop();
            break;
        }
        }
    }
    dirty_ = true;
}

const ExtPoly& DimCache::ext_poly(PrimeChar pc, std::uint64_t d) {
    const std::uint64_t p = pc.value();
    {
        std::shared_lock lk(mu_);
        auto it = memo_.find({p, d});
        if (it != memo_.end()) return it->second;
    }
    std::unique_lock lk(mu_);
    auto it = memo_.find({p, d});
    if (it != memo_.end()) return it->second;
    compute_locked(p, d);
    return memo_.at({p, d});
}

std::optional<ExtPoly> DimCache::lookup(PrimeChar pc, std::uint64_t d) const {
    std::shared_lock lk(mu_);
    auto it = memo_.find({pc.value(), d});
    if (it == memo_.end()) return std::nullopt;
    return it->second;
}

std::size_t DimCache::size() const {
    std::shared_lock lk(mu_);
    return memo_.size();
}

namespace {

std::uint64_t json_u64(const nlohmann::json& v, const char* what, std::size_t line) {
    if (!(v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0)))
        throw cache_error("cache line " + std::to_string(line) + ": " + what +
                          " must be a nonnegative integer");
    return v.get<std::uint64_t>();
}

} // namespace

void DimCache::load_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw cache_error("cannot open cache file " + path.string());
    std::string line;
    std::size_t lineno = 0;
    std::map<Key, ExtPoly> staged;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw cache_error("cache line " + std::to_string(lineno) + ": " + e.what());
        }
        if (lineno == 1) {
            if (rec.value("format", "") != "sl2ext-cache")
                throw cache_error("cache header: unexpected format field");
            if (rec.value("version", 0) != 1)
                throw cache_error("cache header: unsupported version");
            continue;
        }
        if (!rec.contains("p") || !rec.contains("d") || !rec.contains("coeffs") ||
            !rec["coeffs"].is_array())
            throw cache_error("cache line " + std::to_string(lineno) + ": missing p/d/coeffs");
        const std::uint64_t p = json_u64(rec["p"], "p", lineno);
        const std::uint64_t d = json_u64(rec["d"], "d", lineno);
        if (!is_prime(p))
            throw cache_error("cache line " + std::to_string(lineno) + ": p is not prime");
        std::vector<std::uint64_t> coeffs;
        coeffs.reserve(rec["coeffs"].size());
        for (const auto& c : rec["coeffs"]) coeffs.push_back(json_u64(c, "coefficient", lineno));
        ExtPoly val(std::move(coeffs));
        // invariants: degree bound and block vanishing
        if (!val.is_zero() &&
            static_cast<std::uint64_t>(val.degree()) > (2 * d) / p)
            throw cache_error("cache line " + std::to_string(lineno) +
                              ": degree exceeds floor(2d/p)");
        if (classify_block(PrimeChar(p), 2 * d) == BlockClass::out_of_block && !val.is_zero())
            throw cache_error("cache line " + std::to_string(lineno) +
                              ": nonzero polynomial for an out-of-block weight");
        auto [it, inserted] = staged.emplace(Key{p, d}, val);
        if (!inserted && it->second != val)
            throw cache_error("cache line " + std::to_string(lineno) +
                              ": conflicting duplicate entry");
    }
    if (lineno == 0) throw cache_error("cache file is empty: " + path.string());
    std::unique_lock lk(mu_);
    for (auto& [k, v] : staged) memo_.insert_or_assign(k, std::move(v));
    dirty_ = false;
}

void DimCache::save_jsonl(const std::filesystem::path& path) const {
    std::shared_lock lk(mu_);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw cache_error("cannot write cache file " + path.string());
    nlohmann::ordered_json header;
    header["format"] = "sl2ext-cache";
    header["version"] = 1;
    out << header.dump() << '\n';
    for (const auto& [key, val] : memo_) {
        nlohmann::ordered_json rec;
        rec["p"] = key.first;
        rec["d"] = key.second;
        rec["coeffs"] = val.coeffs();
        out << rec.dump() << '\n';
    }
}

std::optional<DimCache::Mismatch> DimCache::verify_entries() const {
    std::map<Key, ExtPoly> snapshot;
    {
        std::shared_lock lk(mu_);
        snapshot = memo_;
    }
    DimCache fresh;
    for (const auto& [key, val] : snapshot) {
        const ExtPoly& re = fresh.ext_poly(PrimeChar(key.first), key.second);
        if (re == val) continue;
        const std::size_t n = std::max(re.coeffs().size(), val.coeffs().size());
        for (std::size_t i = 0; i < n; ++i)
            if (re.coeff(i) != val.coeff(i))
                return Mismatch{key.first, key.second, i, val.coeff(i), re.coeff(i)};
    }
    return std::nullopt;
}

ExtPoly ext_poly(PrimeChar p, std::uint64_t d) {
    DimCache cache;
    return cache.ext_poly(p, d);
}

ExtTable::ExtTable(PrimeChar pc, std::uint64_t d_max, unsigned z_max, std::uint64_t max_entries)
    : p_(pc), d_max_(d_max), z_max_(z_max) {
    const std::uint64_t width = z_max + std::uint64_t{1};
    const std::uint64_t entries = mul_u64(d_max + 1, width);
    if (entries > max_entries)
        throw capacity_error("dimension table would need " + std::to_string(entries) +
                             " entries (limit " + std::to_string(max_entries) + ")");
    c_.assign(entries, 0);
    const std::uint64_t p = pc.value();
    auto at = [&](std::uint64_t d, unsigned m) -> std::uint64_t& { return c_[d * width + m]; };
    for (std::uint64_t d = 0; d <= d_max; ++d) {
        const Rule r = rule_for(p, d);
        switch (r.kind) {
        case Rule::base_one:
            at(d, 0) = 1;
            break;
        case Rule::zero:
            break;
        case Rule::shift:
            for (unsigned m = 1; m <= z_max; ++m) at(d, m) = at(r.shift_dep, m - 1);
            break;
        case Rule::shift_plus:
            at(d, 0) = at(r.add_dep, 0);
            for (unsigned m = 1; m <= z_max; ++m)
                at(d, m) = add_u64(at(r.shift_dep, m - 1), at(r.add_dep, m));
            break;
        }
    }
    // derived base cases double as a self-check of the recursion wiring
    if (dim(0, 0) != 1) throw std::logic_error("recursion self-check failed: eps(0) != 1");
    if (p > 2 && d_max >= p - 1) {
        if (dim(0, p - 1) != 1 || (z_max >= 1 && dim(1, p - 1) != 1))
            throw std::logic_error("recursion self-check failed: eps(2p-2) != 1+z");
    }
}

std::uint64_t ExtTable::dim(unsigned n, std::uint64_t d) const {
    if (d > d_max_ || n > z_max_)
        throw std::out_of_range("dimension table query outside built bounds");
    return c_[d * (z_max_ + std::uint64_t{1}) + n];
}

std::span<const std::uint64_t> ExtTable::row(std::uint64_t d) const {
    if (d > d_max_) throw std::out_of_range("dimension table row outside built bounds");
    return {c_.data() + d * (z_max_ + std::uint64_t{1}), z_max_ + std::size_t{1}};
}

std::uint64_t ext_dim(PrimeChar p, unsigned n, std::uint64_t d) {
    return ExtTable(p, d, n).dim(n, d);
}

std::uint64_t hom_dim_closed(PrimeChar p, std::uint64_t d) {
    std::uint64_t x = d + 1;
    while (x % p.value() == 0) x /= p.value();
    return x == 1 ? 1 : 0;
}

std::uint64_t ext_dim_general(PrimeChar pc, std::uint64_t lambda, std::uint64_t mu, unsigned m) {
    const std::uint64_t p = pc.value();
    const std::uint64_t a = lambda / p, i = lambda % p;
    const std::uint64_t b = mu / p, j = mu % p;
    if (i == p - 1 || j == p - 1)
        throw unsupported_error("weights with residue p-1 are outside the reduction formulas");
    if (i == j && b >= a && (b - a) % 2 == 0)
        return ext_dim(pc, m, p * (b - a) / 2);
    if (j == p - 2 - i && b > a && (b - a) % 2 == 1) {
        std::uint64_t total = 0;
        if (m >= 1) total = ext_dim(pc, m - 1, p * (b - a - 1) / 2); // Ext^{-1} := 0
        return add_u64(total, ext_dim_general(pc, a, b - 1, m));
    }
    return 0;
}

ScanResult max_ext_scan(PrimeChar p, unsigned n, std::uint64_t d_max) {
    ExtTable table(p, d_max, n);
    ScanResult res;
    for (std::uint64_t d = 0; d <= d_max; ++d) {
        const std::uint64_t v = table.dim(n, d);
        if (v > res.max) {
            res.max = v;
            res.argmax.clear();
        }
        if (v == res.max) res.argmax.push_back(d);
    }
    return res;
}

} // namespace sl2ext
