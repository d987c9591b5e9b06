#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gls/cli.hpp"

using namespace gls;

namespace {

struct Run {
    int exit_code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

std::string config_path(const char* name) {
    return std::string(CONFIG_DIR) + "/" + name;
}

// All base-10 strings of length 1 in order, then length 2, and so on.
std::string expected_champernowne(int digits) {
    std::string s;
    long long block = 10;
    for (int k = 1; s.size() < static_cast<std::size_t>(digits); ++k, block *= 10) {
        char buf[24];
        for (long long value = 0; value < block; ++value) {
            std::snprintf(buf, sizeof buf, "%0*lld", k, value);
            s += buf;
            if (s.size() >= static_cast<std::size_t>(digits)) break;
        }
    }
    return s.substr(0, digits);
}

}  // namespace

TEST_CASE("gen reproduces the classical expansion") {
    const auto run = cli({"gen", "--system", config_path("base10.json"), "--n", "190"});
    CHECK(run.exit_code == 0);
    CHECK(run.out == expected_champernowne(190) + "\n");
}

TEST_CASE("gen emits word boundaries") {
    const std::string boundary_file = std::string(BINARY_DIR) + "/boundaries.txt";
    const auto run = cli({"gen", "--system", config_path("base10.json"), "--n", "12",
                          "--boundaries", boundary_file});
    CHECK(run.exit_code == 0);
    std::ifstream in(boundary_file);
    std::vector<int> starts;
    int v;
    while (in >> v) starts.push_back(v);
    CHECK(starts == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("sums matches the worked example") {
    const auto run = cli({"sums", "--system", config_path("base2.json"), "--eps", "1/4"});
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("\n1/4,10,7,6,") != std::string::npos);
}

TEST_CASE("stats emits the documented columns") {
    const auto run = cli({"stats", "--system", config_path("gls3.json"), "--N", "100", "--K",
                          "2", "--format", "csv"});
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("word,count,measure_num,measure_den,ratio") != std::string::npos);
    CHECK(run.out.find("# system: 1/2,1/4,1/4") != std::string::npos);
}

TEST_CASE("laplace reports the maximizer") {
    const auto run = cli({"laplace", "--system", config_path("base2.json"), "--check", "max",
                          "--eps", "1/4"});
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("\"value_at_max\"") != std::string::npos);
}

TEST_CASE("verify passes on a shipped config") {
    const auto run = cli({"verify", "--system", config_path("gls3.json")});
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("all checks passed") != std::string::npos);
    CHECK(run.out.find("FAIL") == std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(cli({"frobnicate"}).exit_code == 2);
    CHECK(cli({"sums", "--system", config_path("base2.json")}).exit_code == 2);  // no eps
    CHECK(cli({"gen", "--n", "5"}).exit_code == 2);                              // no system
    CHECK(cli({"sums", "--system", "/nonexistent.json", "--eps", "1/4"}).exit_code == 2);
}

TEST_CASE("identical runs are byte-identical") {
    const std::vector<std::string> args{"stats",  "--system", config_path("gls3.json"),
                                        "--N",    "2000",     "--K",
                                        "3",      "--format", "json"};
    const auto first = cli(args);
    const auto second = cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("decimal thresholds convert with a warning") {
    const auto run = cli({"sums", "--system", config_path("base2.json"), "--eps", "0.25"});
    CHECK(run.exit_code == 0);
    CHECK(run.err.find("warning") != std::string::npos);
    CHECK(run.out.find("\n1/4,10,7,6,") != std::string::npos);
}
