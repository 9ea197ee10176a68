// Drives the installed binary end to end through a shell, checking output
// text and the documented exit-code contract (0 ok, 1 failed check, 2 usage).

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BPA_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string temp_path(const std::string& stem) {
    return std::string("/tmp/") + stem + "." + std::to_string(::getpid());
}

} // namespace

TEST_CASE("cli: table r 5 8 matches the golden byte for byte") {
    auto res = run_cli("table r 5 8");
    CHECK(res.exit_code == 0);
    CHECK(res.output == slurp(std::string(BPA_TEST_DATA_DIR) + "/table_r_5_8.txt"));
}

TEST_CASE("cli: compute cross-checks all formulas") {
    auto res = run_cli("compute r 2 2");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("r(2,2) = 15") != std::string::npos);
    CHECK(res.output.find("cross-check OK") != std::string::npos);
    // one record per formula
    CHECK(std::count(res.output.begin(), res.output.end(), '\n') == 4);

    auto res_s = run_cli("compute s 1 2 --method all");
    CHECK(res_s.exit_code == 0);
    CHECK(res_s.output.find("s(1,2) = 2") != std::string::npos);
    CHECK(res_s.output.find("cross-check OK") != std::string::npos);

    auto res_egf = run_cli("compute r 3 5 --method egf");
    CHECK(res_egf.exit_code == 0);
    CHECK(res_egf.output.find("r(3,5) = 18424") != std::string::npos);

    auto res_froms = run_cli("compute r 3 5 --method from-s");
    CHECK(res_froms.exit_code == 0);
    CHECK(res_froms.output.find("18424") != std::string::npos);
}

TEST_CASE("cli: compute r 0 0 yields 1") {
    auto res = run_cli("compute r 0 0 --method recurrence");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("r(0,0) = 1") != std::string::npos);
}

TEST_CASE("cli: enumerate prints canonical lines and totals") {
    auto res = run_cli("enumerate bpa 2 1");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "1||\n|1|\n||1\ntotal 3\n");

    auto res_pa = run_cli("enumerate pa 2");
    CHECK(res_pa.output == "1 2\n1,2\n2,1\ntotal 3\n");

    auto res_sp = run_cli("enumerate special 1 1");
    CHECK(res_sp.output == "total 0\n");

    auto res_lim = run_cli("enumerate bpa 1 3 --limit 2");
    CHECK(res_lim.output.find("total 44") != std::string::npos);
    CHECK(std::count(res_lim.output.begin(), res_lim.output.end(), '\n') == 3);
}

TEST_CASE("cli: enumerate refuses huge families without --force") {
    auto res = run_cli("enumerate bpa 5 8");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("--force") != std::string::npos);
}

TEST_CASE("cli: verify exits 0 and emits the json schema") {
    auto res = run_cli("verify 2 3 --format json");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j["status"] == "pass");
    CHECK(j["checks"].is_array());
    CHECK(!j["checks"].empty());

    auto res_all = run_cli("verify 2 2 --oracle --bijections");
    CHECK(res_all.exit_code == 0);
    CHECK(res_all.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("cli: series commands recover exact values") {
    auto gross = run_cli("series gross 5");
    CHECK(gross.exit_code == 0);
    CHECK(gross.output.find("rounds to   = 541 (matches exact)") != std::string::npos);

    auto barred = run_cli("series gross 2 5 --bits 320");
    CHECK(barred.exit_code == 0);
    CHECK(barred.output.find("rounds to   = 7803 (matches exact)") != std::string::npos);

    auto conv = run_cli("series convergent 8 --terms 20");
    CHECK(conv.exit_code == 0);
    CHECK(conv.output.find("rounds to   = 545835 (matches exact)") != std::string::npos);

    auto asym = run_cli("series asymp 20");
    CHECK(asym.exit_code == 0);
    CHECK(asym.output.find("ratio to exact") != std::string::npos);

    auto traced = run_cli("series convergent 5 --terms 3 --trace");
    CHECK(traced.exit_code == 0);
    CHECK(traced.output.find("main=") != std::string::npos);
    CHECK(traced.output.find("k=3 ") != std::string::npos);
}

TEST_CASE("cli: bfile writes the exact format") {
    const std::string path = temp_path("bpa_cli_bfile");
    auto res = run_cli("bfile r 0 8 " + path);
    CHECK(res.exit_code == 0);
    const std::string body = slurp(path);
    CHECK(body.starts_with("0 1\n1 1\n2 3\n"));
    CHECK(body.ends_with("8 545835\n"));
    std::remove(path.c_str());

    auto res_s = run_cli("bfile s 1 0 " + temp_path("bpa_cli_bfile_s"));
    CHECK(res_s.exit_code == 0);
    CHECK(slurp(temp_path("bpa_cli_bfile_s")) == "0 0\n");
    std::remove(temp_path("bpa_cli_bfile_s").c_str());

    auto bad = run_cli("bfile r 0 3 /nonexistent-dir/out.txt");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("/nonexistent-dir/out.txt") != std::string::npos);
}

TEST_CASE("cli: cache round trip hits on the second run") {
    const std::string path = temp_path("bpa_cli_cache");
    std::remove(path.c_str());

    auto first = run_cli("compute r 3 3 --method recurrence --cache " + path);
    CHECK(first.exit_code == 0);
    CHECK(first.output.find("= 184") != std::string::npos);
    CHECK(first.output.find("[recurrence") != std::string::npos);

    auto second = run_cli("compute r 3 3 --method recurrence --cache " + path);
    CHECK(second.exit_code == 0);
    CHECK(second.output.find("= 184") != std::string::npos);
    CHECK(second.output.find("[cache") != std::string::npos);

    // corrupt the stored value; loading must fail loudly
    {
        std::ofstream out(path, std::ios::trunc);
        out << "bpa-cache 1\nr 3 3 185\n";
    }
    auto corrupt = run_cli("compute r 3 3 --method recurrence --cache " + path);
    CHECK(corrupt.exit_code == 1);
    CHECK(corrupt.output.find("consistency failure") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli: usage errors exit 2, help exits 0") {
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("compute x 1 1").exit_code == 2);
    CHECK(run_cli("table r 1 1 --format yaml").exit_code == 2);
    CHECK(run_cli("enumerate pa 1 2").exit_code == 2);
    CHECK(run_cli("series asymp 2 5").exit_code == 2);
    CHECK(run_cli("compute s 1 0 --method inclusion-exclusion").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("enumerate --help").exit_code == 0);
}
