// Command-line front end: dimension queries, tables, verification suites,
// growth reports and cache management.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sl2ext/errors.hpp"
#include "sl2ext/growth.hpp"
#include "sl2ext/labels.hpp"
#include "sl2ext/partitions.hpp"
#include "sl2ext/recursion.hpp"
#include "sl2ext/series.hpp"

using json = nlohmann::ordered_json;
using namespace sl2ext;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_overflow = 3;
constexpr int exit_verification = 4;
constexpr int exit_capacity = 5;

struct Options {
    std::uint64_t prime = 2;
    unsigned n = 0;
    unsigned max_n = 8;
    std::uint64_t weight = 0;
    std::uint64_t max_weight = 0;
    std::uint64_t lambda = 0;
    std::uint64_t mu = 0;
    std::size_t ds = 64;
    std::size_t dz = 12;
    std::string format = "plain";
    std::string cache_path;
    bool no_cache = false;
    std::size_t limit = std::size_t{1} << 22;
    unsigned length = 0;
    unsigned lo = 20;
    unsigned hi = 200;
    unsigned z_slice = 0;
    bool has_lambda = false, has_mu = false, has_z = false, has_length = false;
    bool fibonacci = false, binomial = false, constant = false, compositions = false;
};

std::string resolved_cache_path(const Options& opt) {
    if (opt.no_cache) return {};
    if (!opt.cache_path.empty()) return opt.cache_path;
    if (const char* env = std::getenv("SL2EXT_CACHE")) return env;
    return {};
}

void emit(const json& doc, const Options& opt) { // json format only
    (void)opt;
    std::cout << doc.dump(2) << '\n';
}

int run_dim(const Options& opt) {
    const PrimeChar p(opt.prime);
    std::uint64_t value = 0;
    json doc;
    doc["command"] = "dim";
    doc["prime"] = opt.prime;
    doc["n"] = opt.n;
    if (opt.has_lambda || opt.has_mu) {
        if (!(opt.has_lambda && opt.has_mu))
            throw std::invalid_argument("--lambda and --mu must be given together");
        value = ext_dim_general(p, opt.lambda, opt.mu, opt.n);
        doc["lambda"] = opt.lambda;
        doc["mu"] = opt.mu;
    } else {
        doc["weight"] = opt.weight;
        if (opt.weight % 2 != 0) {
            value = 0; // odd weights sit outside the principal block
        } else {
            const std::uint64_t d = opt.weight / 2;
            const std::string cache = resolved_cache_path(opt);
            if (!cache.empty()) {
                DimCache store;
                if (std::filesystem::exists(cache)) store.load_jsonl(cache);
                value = store.ext_poly(p, d).coeff(opt.n);
                if (store.dirty()) store.save_jsonl(cache);
            } else {
                value = ext_dim(p, opt.n, d);
            }
        }
    }
    doc["dim"] = value;
    if (opt.format == "json")
        emit(doc, opt);
    else if (opt.format == "csv") {
        if (opt.has_lambda)
            std::cout << "p,n,lambda,mu,dim\n"
                      << opt.prime << ',' << opt.n << ',' << opt.lambda << ',' << opt.mu << ','
                      << value << '\n';
        else
            std::cout << "p,n,weight,dim\n"
                      << opt.prime << ',' << opt.n << ',' << opt.weight << ',' << value << '\n';
    } else {
        std::cout << value << '\n';
    }
    return exit_ok;
}

int run_table(const Options& opt) {
    const PrimeChar p(opt.prime);
    const std::uint64_t d_max = opt.max_weight / 2;
    ExtTable table(p, d_max, opt.max_n);
    if (opt.format == "json") {
        json doc;
        doc["command"] = "table";
        doc["prime"] = opt.prime;
        doc["max_n"] = opt.max_n;
        doc["max_weight"] = opt.max_weight;
        doc["columns"] = {"n", "d", "dimension"};
        json rows = json::array();
        for (unsigned n = 0; n <= opt.max_n; ++n)
            for (std::uint64_t d = 0; d <= d_max; ++d)
                rows.push_back({n, d, table.dim(n, d)});
        doc["rows"] = std::move(rows);
        emit(doc, opt);
        return exit_ok;
    }
    const char sep = opt.format == "csv" ? ',' : ' ';
    std::cout << "n" << sep << "d" << sep << "dimension\n";
    for (unsigned n = 0; n <= opt.max_n; ++n)
        for (std::uint64_t d = 0; d <= d_max; ++d)
            std::cout << n << sep << d << sep << table.dim(n, d) << '\n';
    return exit_ok;
}

int run_series(const Options& opt) {
    const PrimeChar p(opt.prime);
    const TruncSeries g = dimension_series(p, opt.ds, opt.dz);
    if (opt.format == "json") {
        json doc;
        doc["command"] = "series";
        doc["prime"] = opt.prime;
        doc["ds"] = opt.ds;
        doc["dz"] = opt.dz;
        json entries = json::array();
        for (std::size_t d = 0; d <= g.s_max(); ++d)
            for (std::size_t m = 0; m <= g.z_max(); ++m) {
                if (opt.has_z && m != opt.z_slice) continue;
                if (g.coeff(d, m) != 0) entries.push_back({d, m, g.coeff(d, m)});
            }
        doc["entries"] = std::move(entries);
        emit(doc, opt);
        return exit_ok;
    }
    if (!opt.has_z) {
        g.dump_csv(std::cout);
        return exit_ok;
    }
    std::cout << "s_degree,z_degree,coefficient\n";
    for (std::size_t d = 0; d <= g.s_max(); ++d)
        if (g.coeff(d, opt.z_slice) != 0)
            std::cout << d << ',' << opt.z_slice << ',' << g.coeff(d, opt.z_slice) << '\n';
    return exit_ok;
}

json report_json(const IdentityReport& r) {
    json c;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["s_checked"] = r.s_checked;
    c["z_checked"] = r.z_checked;
    c["coefficients_checked"] = r.coefficients_checked;
    if (r.first_failure) {
        c["first_failure"] = {{"s", r.first_failure->s},
                              {"z", r.first_failure->z},
                              {"residual", r.first_failure->residual}};
        if (!r.detail.empty()) c["detail"] = r.detail;
    } else {
        c["first_failure"] = nullptr;
    }
    return c;
}

IdentityReport base_case_check(PrimeChar p) {
    IdentityReport rep;
    rep.name = "base-cases";
    ExtTable table(p, p.value(), 2);
    rep.s_checked = p.value();
    rep.z_checked = 1;
    rep.coefficients_checked = 3;
    const std::uint64_t d1 = p.is_two() ? 1 : p.value() - 1;
    if (table.dim(0, 0) != 1 || table.dim(0, d1) != 1 || table.dim(1, d1) != 1) {
        rep.pass = false;
        rep.detail = "eps(0) or eps(2p-2) mismatch";
    }
    return rep;
}

IdentityReport cross_method_check(PrimeChar p, std::size_t ds, std::size_t dz) {
    IdentityReport rep;
    if (p.is_two()) {
        rep.name = "cross-method-partitions";
        const unsigned n_max = static_cast<unsigned>(std::min<std::size_t>(dz, 12));
        ExtTable table(p, ds, n_max);
        Pow2PartitionTable counts(ds + 1, n_max + 1);
        rep.s_checked = ds;
        rep.z_checked = n_max;
        for (std::uint64_t d = 0; d <= ds; ++d)
            for (unsigned n = 0; n <= n_max; ++n) {
                ++rep.coefficients_checked;
                if (table.dim(n, d) != counts.count(n + 1, d + 1) && rep.pass) {
                    rep.pass = false;
                    rep.first_failure = IdentityReport::Failure{
                        static_cast<std::size_t>(d), n,
                        static_cast<std::int64_t>(table.dim(n, d)) -
                            static_cast<std::int64_t>(counts.count(n + 1, d + 1))};
                }
            }
        return rep;
    }
    rep.name = "cross-method-labels";
    const unsigned n_max = static_cast<unsigned>(std::min<std::size_t>(dz, 8));
    ExtTable table(p, ds, n_max);
    rep.s_checked = ds;
    rep.z_checked = n_max;
    for (unsigned n = 0; n <= n_max; ++n) {
        const auto dims = ext_dims_via_labels(p, n, ds);
        for (std::uint64_t d = 0; d <= ds; ++d) {
            ++rep.coefficients_checked;
            if (dims[d] != table.dim(n, d) && rep.pass) {
                rep.pass = false;
                rep.first_failure = IdentityReport::Failure{
                    static_cast<std::size_t>(d), n,
                    static_cast<std::int64_t>(table.dim(n, d)) -
                        static_cast<std::int64_t>(dims[d])};
            }
        }
    }
    return rep;
}

int run_verify(const Options& opt) {
    const PrimeChar p(opt.prime);
    std::vector<IdentityReport> checks;
    checks.push_back(base_case_check(p));
    const TruncSeries g = dimension_series(p, opt.ds, opt.dz);
    checks.push_back(check_functional_equation(p, g));
    if (p.is_two()) {
        checks.push_back(check_slice_recursion(g));
        unsigned k = 1;
        while ((std::uint64_t{1} << k) <= opt.ds) ++k;
        checks.push_back(check_product_identity(g, k));
        IdentityReport odd_form = check_functional_equation_odd_form(p, g);
        odd_form.name = "functional-equation-odd-form";
        checks.push_back(odd_form);
    } else {
        checks.push_back(check_odd_slice_identities(p, g));
    }
    checks.push_back(cross_method_check(p, opt.ds, opt.dz));

    const std::string cache = resolved_cache_path(opt);
    if (!cache.empty()) {
        IdentityReport rep;
        rep.name = "cache-validation";
        try {
            DimCache store;
            store.load_jsonl(cache);
            rep.coefficients_checked = store.size();
            if (const auto bad = store.verify_entries()) {
                rep.pass = false;
                rep.detail = "entry p=" + std::to_string(bad->p) + " d=" +
                             std::to_string(bad->d) + " coefficient " +
                             std::to_string(bad->index) + ": cached " +
                             std::to_string(bad->cached) + ", recomputed " +
                             std::to_string(bad->recomputed);
            }
        } catch (const cache_error& e) {
            rep.pass = false;
            rep.detail = e.what();
        }
        checks.push_back(rep);
    }

    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.pass;

    if (opt.format == "json") {
        json doc;
        doc["command"] = "verify";
        doc["prime"] = opt.prime;
        doc["ds"] = opt.ds;
        doc["dz"] = opt.dz;
        json arr = json::array();
        for (const auto& c : checks) arr.push_back(report_json(c));
        doc["checks"] = std::move(arr);
        doc["pass"] = all_pass;
        emit(doc, opt);
    } else {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (s<=" << c.s_checked
                      << ", z<=" << c.z_checked << ", " << c.coefficients_checked
                      << " values)";
            if (!c.pass) {
                if (c.first_failure)
                    std::cout << " first failure at s^" << c.first_failure->s << " z^"
                              << c.first_failure->z << " residual "
                              << c.first_failure->residual;
                if (!c.detail.empty()) std::cout << " [" << c.detail << ']';
            }
            std::cout << '\n';
        }
        std::cout << (all_pass ? "result: all checks passed\n" : "result: FAILURE\n");
    }
    return all_pass ? exit_ok : exit_verification;
}

int run_scan(const Options& opt) {
    const PrimeChar p(opt.prime);
    const std::uint64_t d_max = opt.max_weight / 2;
    const ScanResult scan = max_ext_scan(p, opt.n, d_max);
    const GrowthReport bounded = boundedness_scan(p, opt.n, d_max);
    if (opt.format == "json") {
        json doc;
        doc["command"] = "scan";
        doc["prime"] = opt.prime;
        doc["n"] = opt.n;
        doc["max_weight"] = opt.max_weight;
        doc["max_dim"] = scan.max;
        json weights = json::array();
        for (const auto d : scan.argmax) weights.push_back(2 * d);
        doc["argmax_weights"] = std::move(weights);
        json improvements = json::array();
        for (const auto& row : bounded.rows)
            improvements.push_back({{"weight", 2 * row.x}, {"dim", row.measured}});
        doc["improvements"] = std::move(improvements);
        doc["last_improvement_weight"] = 2 * bounded.rows.back().x;
        emit(doc, opt);
        return exit_ok;
    }
    if (opt.format == "csv") {
        std::cout << "weight,dim\n";
        for (const auto d : scan.argmax) std::cout << 2 * d << ',' << scan.max << '\n';
        return exit_ok;
    }
    std::cout << "max_dim " << scan.max << "\nargmax_weights";
    for (const auto d : scan.argmax) std::cout << ' ' << 2 * d;
    std::cout << "\nlast_new_max_weight " << 2 * bounded.rows.back().x << '\n';
    return exit_ok;
}

int run_labels(const Options& opt) {
    const LabelList list = build_labels(opt.n, opt.limit);
    std::vector<std::pair<std::size_t, const Label*>> chosen;
    for (std::size_t i = 0; i < list.labels.size(); ++i)
        if (!opt.has_length || list.labels[i].length() == opt.length)
            chosen.emplace_back(i, &list.labels[i]);
    if (opt.format == "json") {
        json doc;
        doc["command"] = "labels";
        doc["degree"] = opt.n;
        doc["count"] = chosen.size();
        json arr = json::array();
        for (const auto& [i, l] : chosen)
            arr.push_back({{"index", i}, {"length", l->length()}, {"text", to_string(*l)}});
        doc["labels"] = std::move(arr);
        emit(doc, opt);
        return exit_ok;
    }
    if (opt.format == "csv") {
        std::cout << "index,length,label\n";
        for (const auto& [i, l] : chosen)
            std::cout << i << ',' << l->length() << ",\"" << to_string(*l) << "\"\n";
        return exit_ok;
    }
    for (const auto& [i, l] : chosen) std::cout << to_string(*l) << '\n';
    return exit_ok;
}

int run_growth(const Options& opt) {
    const int modes = int(opt.fibonacci) + int(opt.binomial) + int(opt.constant) +
                      int(opt.compositions);
    if (modes != 1)
        throw std::invalid_argument(
            "choose exactly one of --fibonacci, --binomial, --constant, --compositions");
    if (opt.fibonacci) {
        const GrowthReport r = fibonacci_check(opt.max_n);
        if (opt.format == "json") {
            json doc;
            doc["command"] = "growth";
            doc["mode"] = "fibonacci";
            doc["max_n"] = opt.max_n;
            json rows = json::array();
            for (const auto& row : r.rows) {
                json jr;
                jr["n"] = row.x;
                jr["labels"] = row.measured;
                jr["fibonacci"] = row.predicted ? json(*row.predicted) : json(nullptr);
                jr["ratio"] = row.ratio ? json(*row.ratio) : json(nullptr);
                rows.push_back(std::move(jr));
            }
            doc["rows"] = std::move(rows);
            doc["pass"] = r.pass;
            emit(doc, opt);
        } else if (opt.format == "csv") {
            growth_report_csv(std::cout, r);
        } else {
            std::cout << "n labels fibonacci\n";
            for (const auto& row : r.rows)
                std::cout << row.x << ' ' << row.measured << ' ' << *row.predicted << '\n';
            std::cout << (r.pass ? "result: counts match\n" : "result: FAILURE\n");
        }
        return r.pass ? exit_ok : exit_verification;
    }
    if (opt.binomial) {
        const double ratio = 0.5 - std::sqrt(5.0) / 10.0;
        if (opt.format == "csv") std::cout << "n,a_star,predicted_a,value\n";
        json rows = json::array();
        if (opt.format == "plain") std::cout << "n a_star predicted_a value\n";
        for (unsigned n = 2; n <= opt.max_n; ++n) {
            const BinomialMax b = binomial_max(n);
            const auto predicted = static_cast<std::uint64_t>(ratio * n);
            if (opt.format == "json")
                rows.push_back({{"n", n},
                                {"a_star", b.a_star},
                                {"predicted_a", predicted},
                                {"value", b.value.to_string()}});
            else
                std::cout << n << (opt.format == "csv" ? "," : " ") << b.a_star
                          << (opt.format == "csv" ? "," : " ") << predicted
                          << (opt.format == "csv" ? "," : " ") << b.value.to_string() << '\n';
        }
        if (opt.format == "json") {
            json doc;
            doc["command"] = "growth";
            doc["mode"] = "binomial";
            doc["max_n"] = opt.max_n;
            doc["rows"] = std::move(rows);
            emit(doc, opt);
        }
        return exit_ok;
    }
    if (opt.constant) {
        const double closed = growth_constant_closed_form();
        const GrowthFit fit = growth_constant_estimate(opt.lo, opt.hi);
        const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
        if (opt.format == "json") {
            json doc;
            doc["command"] = "growth";
            doc["mode"] = "constant";
            doc["lo"] = opt.lo;
            doc["hi"] = opt.hi;
            doc["closed_form"] = closed;
            doc["fitted_slope"] = fit.slope;
            doc["fitted_rate"] = fit.rate;
            doc["golden_ratio"] = golden;
            emit(doc, opt);
        } else {
            std::cout << "closed_form " << closed << "\nfitted_slope " << fit.slope
                      << "\nfitted_rate " << fit.rate << "\ngolden_ratio " << golden << '\n';
        }
        return exit_ok;
    }
    // compositions
    const PrimeChar p(opt.prime);
    if (opt.weight % 2 != 0)
        throw std::invalid_argument("--weight must be even for composition counts");
    const std::uint64_t value = power_composition_count(p, opt.length, opt.weight / 2);
    if (opt.format == "json") {
        json doc;
        doc["command"] = "growth";
        doc["mode"] = "compositions";
        doc["prime"] = opt.prime;
        doc["length"] = opt.length;
        doc["weight"] = opt.weight;
        doc["count"] = value;
        emit(doc, opt);
    } else {
        std::cout << value << '\n';
    }
    return exit_ok;
}

int run_witness(const Options& opt) {
    const PrimeChar p(opt.prime);
    const Witness w = witness_weight(opt.n, opt.length, p);
    const std::uint64_t weight = mul_u64(2, w.power_sum - 1);
    if (opt.format == "json") {
        json doc;
        doc["command"] = "witness";
        doc["prime"] = opt.prime;
        doc["n"] = opt.n;
        doc["length"] = opt.length;
        doc["exponents"] = w.exponents;
        doc["power_sum"] = w.power_sum;
        doc["weight"] = weight;
        doc["bound"] = w.bound;
        doc["certified"] = w.certified;
        emit(doc, opt);
        return exit_ok;
    }
    std::cout << "exponents";
    for (unsigned b : w.exponents) std::cout << ' ' << b;
    std::cout << "\npower_sum " << w.power_sum << "\nweight " << weight << "\nbound "
              << w.bound << "\ncertified " << (w.certified ? "true" : "false") << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dimensions of Ext groups between SL2 Weyl modules in "
                 "characteristic p, computed by recursion, generating series and "
                 "combinatorial counting."};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"plain", "csv", "json"}))
            ->capture_default_str();
    };
    auto add_cache = [&](CLI::App* cmd) {
        cmd->add_option("--cache", opt.cache_path,
                        "JSON-lines cache file (SL2EXT_CACHE is the env fallback)");
        cmd->add_flag("--no-cache", opt.no_cache, "never read or write a cache");
    };

    CLI::App* dim = app.add_subcommand(
        "dim", "dimension of Ext^n(Delta(0), Delta(weight)), or of "
               "Ext^n(Delta(lambda), Delta(mu)) when --lambda/--mu are given");
    dim->add_option("--prime", opt.prime, "characteristic")->required();
    dim->add_option("--n", opt.n, "cohomological degree")->required();
    dim->add_option("--weight", opt.weight, "module weight 2d (even; odd weights give 0)");
    dim->add_option("--lambda", opt.lambda, "first weight")->each([&](const std::string&) {
        opt.has_lambda = true;
    });
    dim->add_option("--mu", opt.mu, "second weight")->each([&](const std::string&) {
        opt.has_mu = true;
    });
    add_common(dim);
    add_cache(dim);

    CLI::App* table = app.add_subcommand("table", "dimension table; columns n,d,dimension "
                                                  "with d the half-weight (weight = 2d)");
    table->add_option("--prime", opt.prime)->required();
    table->add_option("--max-n", opt.max_n)->required();
    table->add_option("--max-weight", opt.max_weight)->required();
    add_common(table);

    CLI::App* series = app.add_subcommand(
        "series", "CSV dump of the generating series (s_degree,z_degree,coefficient)");
    series->add_option("--prime", opt.prime)->required();
    series->add_option("--ds", opt.ds, "s-degree truncation")->required();
    series->add_option("--dz", opt.dz, "z-degree truncation")->required();
    series->add_option("--z", opt.z_slice, "restrict to one z-slice")
        ->each([&](const std::string&) { opt.has_z = true; });
    add_common(series);

    CLI::App* verify = app.add_subcommand(
        "verify", "functional-equation, slice, product and cross-method checks; "
                  "validates the cache when one is configured");
    verify->add_option("--prime", opt.prime)->required();
    verify->add_option("--ds", opt.ds)->capture_default_str();
    verify->add_option("--dz", opt.dz)->capture_default_str();
    add_common(verify);
    add_cache(verify);

    CLI::App* scan = app.add_subcommand(
        "scan", "maximum dimension over all weights up to --max-weight, with maximizers "
                "and running-maximum improvements (csv columns: weight,dim)");
    scan->add_option("--prime", opt.prime)->required();
    scan->add_option("--n", opt.n)->required();
    scan->add_option("--max-weight", opt.max_weight)->required();
    add_common(scan);

    CLI::App* labels = app.add_subcommand("labels", "label lists in k_i shorthand");
    labels->add_option("--n", opt.n, "degree")->required();
    labels->add_option("--length", opt.length, "only labels of this length")
        ->each([&](const std::string&) { opt.has_length = true; });
    labels->add_option("--limit", opt.limit, "capacity limit")->capture_default_str();
    add_common(labels);

    CLI::App* growth = app.add_subcommand("growth", "growth reports");
    growth->add_flag("--fibonacci", opt.fibonacci, "label counts vs Fibonacci numbers");
    growth->add_flag("--binomial", opt.binomial, "binomial argmax locations and values");
    growth->add_flag("--constant", opt.constant, "growth-rate constant and fit");
    growth->add_flag("--compositions", opt.compositions,
                     "ordered p-power tuples reaching one weight");
    growth->add_option("--max-n", opt.max_n)->capture_default_str();
    growth->add_option("--lo", opt.lo)->capture_default_str();
    growth->add_option("--hi", opt.hi)->capture_default_str();
    growth->add_option("--prime", opt.prime);
    growth->add_option("--length", opt.length);
    growth->add_option("--weight", opt.weight);
    add_common(growth);

    CLI::App* witness = app.add_subcommand(
        "witness", "weight certifying dim Ext^n >= number of length-k labels");
    witness->add_option("--prime", opt.prime)->required();
    witness->add_option("--n", opt.n)->required();
    witness->add_option("--length", opt.length)->required();
    add_common(witness);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*dim) return run_dim(opt);
        if (*table) return run_table(opt);
        if (*series) return run_series(opt);
        if (*verify) return run_verify(opt);
        if (*scan) return run_scan(opt);
        if (*labels) return run_labels(opt);
        if (*growth) return run_growth(opt);
        if (*witness) return run_witness(opt);
    } catch (const overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_overflow;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_capacity;
    } catch (const std::invalid_argument& e) { // usage, unsupported, truncation
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const cache_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
