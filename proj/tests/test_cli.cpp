#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    const std::string cmd = env_prefix + std::string(SL2EXT_CLI_PATH) + " " + args + " 2>&1";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.output.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("dimension queries") {
    CHECK(run_cli("dim --prime 3 --n 3 --weight 76").output == "3\n");
    CHECK(run_cli("dim --prime 2 --n 0 --weight 14").output == "1\n");
    CHECK(run_cli("dim --prime 3 --n 1 --weight 2").output == "0\n");
    CHECK(run_cli("dim --prime 5 --n 1 --weight 7").output == "0\n"); // odd weight
    CHECK(run_cli("dim --prime 3 --n 3 --lambda 1 --mu 13").output == "1\n");
    CHECK(run_cli("dim --prime 3 --n 3 --weight 76").exit_code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("dim --prime 4 --n 0 --weight 2").exit_code == 2);    // composite
    CHECK(run_cli("dim --prime 3").exit_code == 2);                     // missing --n
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("dim --prime 3 --n 0 --lambda 2 --mu 8").exit_code == 2); // residue p-1
    CHECK(run_cli("witness --prime 3 --n 10 --length 11").exit_code == 3);  // 3^121
    CHECK(run_cli("labels --n 60").exit_code == 5);
    CHECK(run_cli("labels --n 10 --limit 4").exit_code == 5);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("label listings reproduce the shorthand") {
    CHECK(run_cli("labels --n 2").output ==
          "(k_2+1, k_2+k_0)\n(k_2, k_2+k_1+2)\n(k_2, k_2+k_1+1, k_2+k_1+k_0+2)\n");
    const RunResult five = run_cli("labels --n 3");
    CHECK(five.output ==
          "(k_3+1, k_3+k_1+1)\n(k_3+1, k_3+k_1, k_3+k_1+k_0+1)\n"
          "(k_3, k_3+k_2+2, k_3+k_2+k_0+1)\n(k_3, k_3+k_2+1, k_3+k_2+k_1+3)\n"
          "(k_3, k_3+k_2+1, k_3+k_2+k_1+2, k_3+k_2+k_1+k_0+3)\n");
    CHECK(run_cli("labels --n 3 --length 4").output ==
          "(k_3, k_3+k_2+1, k_3+k_2+k_1+2, k_3+k_2+k_1+k_0+3)\n");
}

TEST_CASE("verification suites") {
    const RunResult v2 = run_cli("verify --prime 2 --ds 64 --dz 16");
    CHECK(v2.exit_code == 0);
    CHECK(v2.output.find("result: all checks passed") != std::string::npos);

    const RunResult v3 = run_cli("verify --prime 3 --ds 81 --dz 12 --format json");
    CHECK(v3.exit_code == 0);
    const auto doc = nlohmann::json::parse(v3.output);
    CHECK(doc.at("command") == "verify");
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("checks").is_array());
    for (const auto& c : doc.at("checks")) {
        CHECK(c.contains("name"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("coefficients_checked"));
    }
}

TEST_CASE("corrupted caches are identified") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = (dir / "sl2ext_cli_cache.jsonl").string();
    std::filesystem::remove(path);
    CHECK(run_cli("dim --prime 2 --n 1 --weight 2 --cache " + path).output == "1\n");
    CHECK(std::filesystem::exists(path));
    CHECK(run_cli("verify --prime 2 --ds 16 --dz 4 --cache " + path).exit_code == 0);

    // flip one stored coefficient of eps(2) = 1 + z
    std::string text;
    {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    const auto pos = text.find("\"coeffs\":[1,1]");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 14, "\"coeffs\":[1,2]");
    std::ofstream(path, std::ios::trunc) << text;

    const RunResult bad = run_cli("verify --prime 2 --ds 16 --dz 4 --cache " + path);
    CHECK(bad.exit_code == 4);
    CHECK(bad.output.find("FAIL cache-validation") != std::string::npos);
    CHECK(bad.output.find("d=1 coefficient 1") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("scan locates the paired-power weights") {
    const RunResult r = run_cli("scan --prime 2 --n 2 --max-weight 400");
    CHECK(r.output.find("max_dim 2\n") != std::string::npos);
    CHECK(r.output.find("argmax_weights 10 18 22 34 38 46 66 70 78 94 130 134 142 158 190 "
                        "258 262 270 286 318 382\n") != std::string::npos);

    const auto doc =
        nlohmann::json::parse(run_cli("scan --prime 3 --n 2 --max-weight 100 --format json").output);
    CHECK(doc.at("max_dim") == 2);
    CHECK(doc.at("argmax_weights").front() == 22);
}

TEST_CASE("table export") {
    const RunResult r = run_cli("table --prime 3 --max-n 1 --max-weight 8 --format csv");
    CHECK(r.output.rfind("n,d,dimension\n0,0,1\n0,1,0\n0,2,1\n", 0) == 0);
    const auto doc =
        nlohmann::json::parse(run_cli("table --prime 3 --max-n 1 --max-weight 8 --format json").output);
    CHECK(doc.at("columns") == nlohmann::json({"n", "d", "dimension"}));
}

TEST_CASE("growth front ends") {
    const RunResult fib = run_cli("growth --fibonacci --max-n 25 --format csv");
    CHECK(fib.exit_code == 0);
    CHECK(fib.output.find("25,196418,196418,") != std::string::npos);

    const auto doc = nlohmann::json::parse(
        run_cli("growth --constant --lo 20 --hi 120 --format json").output);
    CHECK(std::abs(doc.at("closed_form").get<double>() - 1.6180339887) < 1e-5);

    CHECK(run_cli("growth --compositions --prime 2 --length 3 --weight 8").output == "3\n");
    CHECK(run_cli("growth --fibonacci --binomial").exit_code == 2);

    // n = 19 has an exact tie C(15,5) = C(14,6); the smaller argmax wins
    const RunResult bin = run_cli("growth --binomial --max-n 19 --format csv");
    CHECK(bin.output.find("19,4,5,3003\n") != std::string::npos);
}

TEST_CASE("the cache path can come from the environment") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = (dir / "sl2ext_cli_env_cache.jsonl").string();
    std::filesystem::remove(path);
    const RunResult r =
        run_cli("dim --prime 3 --n 3 --weight 76", "SL2EXT_CACHE=" + path + " ");
    CHECK(r.output == "3\n");
    CHECK(std::filesystem::exists(path));
    // --no-cache wins over the environment
    std::filesystem::remove(path);
    run_cli("dim --prime 3 --n 0 --weight 4 --no-cache", "SL2EXT_CACHE=" + path + " ");
    CHECK(!std::filesystem::exists(path));
}

TEST_CASE("every command accepts every format") {
    const std::vector<std::string> commands = {
        "dim --prime 3 --n 1 --weight 4",
        "table --prime 2 --max-n 1 --max-weight 6",
        "series --prime 2 --ds 4 --dz 2",
        "verify --prime 2 --ds 16 --dz 4",
        "scan --prime 2 --n 1 --max-weight 32",
        "labels --n 1",
        "growth --fibonacci --max-n 3",
        "growth --binomial --max-n 5",
        "growth --constant --lo 12 --hi 30",
        "growth --compositions --prime 3 --length 2 --weight 8",
        "witness --prime 3 --n 2 --length 2",
    };
    for (const auto& cmd : commands)
        for (const std::string fmt : {"plain", "csv", "json"}) {
            const RunResult r = run_cli(cmd + " --format " + fmt);
            CAPTURE(cmd + " --format " + fmt);
            CHECK(r.exit_code == 0);
            CHECK(!r.output.empty());
            if (fmt == "json") {
                const auto parsed = nlohmann::json::parse(r.output);
                CHECK(parsed.contains("command"));
            }
        }
}

TEST_CASE("identical invocations are byte identical") {
    const std::string cmd = "table --prime 5 --max-n 4 --max-weight 200 --format csv";
    CHECK(run_cli(cmd).output == run_cli(cmd).output);
    const std::string verify_cmd = "verify --prime 3 --ds 27 --dz 6 --format json";
    CHECK(run_cli(verify_cmd).output == run_cli(verify_cmd).output);
}

TEST_CASE("series dump matches the dimension query") {
    const RunResult r = run_cli("series --prime 3 --ds 38 --dz 3 --z 3");
    CHECK(r.output.find("38,3,3\n") != std::string::npos); // weight 76 in degree 3
}
