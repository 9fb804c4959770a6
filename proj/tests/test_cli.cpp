#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(VERIFY_BIN) + " " + args;
    const int raw = std::system(cmd.c_str());
    REQUIRE(raw != -1);
    return WEXITSTATUS(raw);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("usage errors exit with status 2") {
    CHECK(run("bogus-suite > /dev/null 2>&1") == 2);
    CHECK(run("> /dev/null 2>&1") == 2);
    CHECK(run("describe bogus > /dev/null 2>&1") == 2);
    CHECK(run("hyperg --primes 4 > /dev/null 2>&1") == 2);
    CHECK(run("hyperg --s-max 0 > /dev/null 2>&1") == 2);
}

TEST_CASE("help and descriptions exit cleanly") {
    CHECK(run("--help > /dev/null 2>&1") == 0);
    CHECK(run("describe kz > /dev/null") == 0);
    CHECK(run("describe all > /dev/null") == 0);
}

TEST_CASE("a passing suite run exits 0 and writes a report") {
    CHECK(run("hyperg --primes 3 --s-max 1 --out cli_report.json") == 0);
    const std::string body = slurp("cli_report.json");
    CHECK(body.find("\"tool\": \"verify\"") != std::string::npos);
    CHECK(body.find("\"name\": \"hyperg\"") != std::string::npos);
    CHECK(body.find("\"failed\": 0") != std::string::npos);
    std::remove("cli_report.json");
}

TEST_CASE("reports are byte-deterministic across runs") {
    const std::string flags = "unit-root --primes 5 --s-max 2 --samples 5 --jobs 2 --out ";
    CHECK(run(flags + "cli_a.json") == 0);
    CHECK(run(flags + "cli_b.json") == 0);
    CHECK(slurp("cli_a.json") == slurp("cli_b.json"));
    std::remove("cli_a.json");
    std::remove("cli_b.json");
}

TEST_CASE("config file values can be overridden by flags") {
    {
        std::ofstream cfg("cli_cfg.json");
        cfg << "{\"primes\": [7], \"s_max\": 1, \"samples\": 3}\n";
    }
    CHECK(run("ghost --config cli_cfg.json --out cli_cfg_report.json") == 0);
    const std::string body = slurp("cli_cfg_report.json");
    CHECK(body.find("\"s_max\": 1") != std::string::npos);
    CHECK(body.find("\"samples\": 3") != std::string::npos);
    CHECK(body.find("\"modulus\": \"7^") != std::string::npos);
    CHECK(body.find("\"modulus\": \"3^") == std::string::npos);
    std::remove("cli_cfg.json");
    std::remove("cli_cfg_report.json");
}

TEST_CASE("output matches the checked-in golden report") {
    CHECK(run("hyperg --primes 3 --s-max 2 --out cli_golden_candidate.json") == 0);
    const std::string expect = slurp(std::string(GOLDEN_DIR) + "/hyperg_p3.json");
    CHECK(slurp("cli_golden_candidate.json") == expect);
    std::remove("cli_golden_candidate.json");
}
