#ifndef SL2EXT_RECURSION_HPP
#define SL2EXT_RECURSION_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <vector>

#include "sl2ext/ext_poly.hpp"
#include "sl2ext/prime.hpp"

namespace sl2ext {

/// Position of a weight relative to the principal block.
enum class BlockClass {
    zero_residue,      // w = 0 (mod 2p)
    minus_two_residue, // w = 2p-2 (mod 2p), w > 0
    out_of_block,
};

/// Classifies an arbitrary nonnegative weight. Odd weights are always
/// outside the principal block; for p = 2 every even weight is inside.
BlockClass classify_block(PrimeChar p, std::uint64_t weight);

/// Memo table (p, d) -> ext polynomial of the weight 2d, with optional
/// JSON-lines persistence. Values are pure functions of the key, so
/// duplicate insertion of recomputed entries is harmless. Readers may run
/// concurrently; computing writers serialize on an internal lock.
class DimCache {
public:
    /// The polynomial whose z^m coefficient is dim Ext^m(Delta(0), Delta(2d)).
    /// Computed bottom-up with an explicit worklist, so deep weight chains
    /// cannot overflow the call stack.
    const ExtPoly& ext_poly(PrimeChar p, std::uint64_t d);

    std::optional<ExtPoly> lookup(PrimeChar p, std::uint64_t d) const;
    std::size_t size() const;
    bool dirty() const noexcept { return dirty_; }

    /// JSON-lines persistence. One header line, then one record per entry:
    ///   {"format":"sl2ext-cache","version":1}
    ///   {"p":2,"d":1,"coeffs":[1,1]}
    /// Loading validates primality, block membership, the degree bound and
    /// coefficient signs before any entry is used; violations raise
    /// cache_error naming the offending line.
    void load_jsonl(const std::filesystem::path& path);
    void save_jsonl(const std::filesystem::path& path) const;

    struct Mismatch {
        std::uint64_t p = 0;
        std::uint64_t d = 0;
        std::size_t index = 0;   // z-degree of the first differing coefficient
        std::uint64_t cached = 0;
        std::uint64_t recomputed = 0;
    };

    /// Recomputes every entry from an empty cache and reports the first
    /// discrepancy, if any. Clean result certifies determinism of the store.
    std::optional<Mismatch> verify_entries() const;

private:
    using Key = std::pair<std::uint64_t, std::uint64_t>; // (p, d)

    void compute_locked(std::uint64_t p, std::uint64_t d);

    mutable std::shared_mutex mu_;
    std::map<Key, ExtPoly> memo_;
    bool dirty_ = false;
};

/// One-shot full polynomial (fresh cache per call).
ExtPoly ext_poly(PrimeChar p, std::uint64_t d);

/// Dense table of dim Ext^m(Delta(0), Delta(2d)) for all d <= d_max and
/// m <= z_max. The same recursion as DimCache, truncated in z, so scans over
/// large weight ranges stay linear in d_max instead of quadratic.
class ExtTable {
public:
    ExtTable(PrimeChar p, std::uint64_t d_max, unsigned z_max,
             std::uint64_t max_entries = std::uint64_t{1} << 28);

    std::uint64_t dim(unsigned n, std::uint64_t d) const;
    std::span<const std::uint64_t> row(std::uint64_t d) const;

    PrimeChar prime() const noexcept { return p_; }
    std::uint64_t d_max() const noexcept { return d_max_; }
    unsigned z_max() const noexcept { return z_max_; }

private:
    PrimeChar p_;
    std::uint64_t d_max_;
    unsigned z_max_;
    std::vector<std::uint64_t> c_;
};

/// dim Ext^n(Delta(0), Delta(2d)), table-backed.
std::uint64_t ext_dim(PrimeChar p, unsigned n, std::uint64_t d);

/// Closed-form Hom dimension: 1 iff d = p^r - 1 for some r >= 0.
std::uint64_t hom_dim_closed(PrimeChar p, std::uint64_t d);

/// dim Ext^m(Delta(lambda), Delta(mu)) for general dominant weights via the
/// residue reductions. Weights with residue p-1 are outside the range the
/// reductions cover and raise unsupported_error. Ext^{-1} is taken to be 0,
/// which grounds the odd-difference reduction at m = 0.
std::uint64_t ext_dim_general(PrimeChar p, std::uint64_t lambda, std::uint64_t mu, unsigned m);

struct ScanResult {
    std::uint64_t max = 0;
    std::vector<std::uint64_t> argmax; // all d attaining the maximum
};

/// Maximum of ext_dim(p, n, d) over 0 <= d <= d_max with all maximizers.
ScanResult max_ext_scan(PrimeChar p, unsigned n, std::uint64_t d_max);

} // namespace sl2ext

#endif
