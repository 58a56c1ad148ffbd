#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sl2ext/errors.hpp"
#include "sl2ext/recursion.hpp"

using namespace sl2ext;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const char* name)
        : path(std::filesystem::temp_directory_path() / name) {}
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }

    void write(const std::string& text) const {
        std::ofstream out(path, std::ios::trunc);
        out << text;
    }
    std::string read() const {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
};

} // namespace

TEST_CASE("save/load round trip is bit exact") {
    TempFile file("sl2ext_cache_roundtrip.jsonl");
    DimCache cache;
    cache.ext_poly(PrimeChar(2), 7);
    cache.ext_poly(PrimeChar(3), 38);
    cache.save_jsonl(file.path);
    const std::string first = file.read();
    CHECK(first.rfind("{\"format\":\"sl2ext-cache\",\"version\":1}\n", 0) == 0);

    DimCache loaded;
    loaded.load_jsonl(file.path);
    CHECK(loaded.size() == cache.size());
    CHECK(loaded.lookup(PrimeChar(3), 38) == cache.lookup(PrimeChar(3), 38));
    CHECK(!loaded.verify_entries().has_value());

    TempFile second("sl2ext_cache_roundtrip2.jsonl");
    loaded.save_jsonl(second.path);
    CHECK(second.read() == first);
}

TEST_CASE("header validation") {
    TempFile file("sl2ext_cache_header.jsonl");
    file.write("{\"format\":\"other\",\"version\":1}\n");
    DimCache cache;
    CHECK_THROWS_AS(cache.load_jsonl(file.path), cache_error);
    file.write("{\"format\":\"sl2ext-cache\",\"version\":2}\n");
    CHECK_THROWS_AS(cache.load_jsonl(file.path), cache_error);
    file.write("");
    CHECK_THROWS_AS(cache.load_jsonl(file.path), cache_error);
    CHECK_THROWS_AS(cache.load_jsonl("/nonexistent/sl2ext.jsonl"), cache_error);
}

TEST_CASE("record validation rejects invariant violations") {
    const std::string header = "{\"format\":\"sl2ext-cache\",\"version\":1}\n";
    TempFile file("sl2ext_cache_invalid.jsonl");
    DimCache cache;

    // composite characteristic
    file.write(header + "{\"p\":4,\"d\":1,\"coeffs\":[1]}\n");
    CHECK_THROWS_AS(cache.load_jsonl(file.path), cache_error);

    // negative coefficient
    file.write(header + "{\"p\":2,\"d\":1,\"coeffs\":[1,-1]}\n");
    CHECK_THROWS_AS(cache.load_jsonl(file.path), cache_error);

    // degree above floor(2d/p)
    file.write(header + "{\"p\":2,\"d\":1,\"coeffs\":[1,1,7]}\n");
    CHECK_THROWS_AS(cache.load_jsonl(file.path), cache_error);

    // nonzero value for an out-of-block weight
    file.write(header + "{\"p\":3,\"d\":1,\"coeffs\":[1]}\n");
    CHECK_THROWS_AS(cache.load_jsonl(file.path), cache_error);

    // conflicting duplicate
    file.write(header + "{\"p\":2,\"d\":1,\"coeffs\":[1,1]}\n{\"p\":2,\"d\":1,\"coeffs\":[1]}\n");
    CHECK_THROWS_AS(cache.load_jsonl(file.path), cache_error);

    // malformed JSON
    file.write(header + "{\"p\":2,\n");
    CHECK_THROWS_AS(cache.load_jsonl(file.path), cache_error);

    // identical duplicate records are tolerated
    file.write(header + "{\"p\":2,\"d\":1,\"coeffs\":[1,1]}\n{\"p\":2,\"d\":1,\"coeffs\":[1,1]}\n");
    CHECK_NOTHROW(cache.load_jsonl(file.path));
}

TEST_CASE("deep verification identifies the offending coefficient") {
    const std::string header = "{\"format\":\"sl2ext-cache\",\"version\":1}\n";
    TempFile file("sl2ext_cache_corrupt.jsonl");
    // eps(2) = 1 + z at p = 2; the stored constant term is wrong but all
    // structural invariants hold
    file.write(header + "{\"p\":2,\"d\":1,\"coeffs\":[0,1]}\n");
    DimCache cache;
    cache.load_jsonl(file.path);
    const auto mismatch = cache.verify_entries();
    REQUIRE(mismatch.has_value());
    CHECK(mismatch->p == 2);
    CHECK(mismatch->d == 1);
    CHECK(mismatch->index == 0);
    CHECK(mismatch->cached == 0);
    CHECK(mismatch->recomputed == 1);
}

TEST_CASE("loading marks the cache clean, computing marks it dirty") {
    TempFile file("sl2ext_cache_dirty.jsonl");
    DimCache cache;
    CHECK(!cache.dirty());
    cache.ext_poly(PrimeChar(2), 3);
    CHECK(cache.dirty());
    cache.save_jsonl(file.path);
    DimCache loaded;
    loaded.load_jsonl(file.path);
    CHECK(!loaded.dirty());
}
