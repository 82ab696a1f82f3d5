#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lowdisc/experiments.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(LOWDISC_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string strip_comments(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.empty() || line[0] != '#') out << line << "\n";
    return out.str();
}

} // namespace

TEST_CASE("cli: documented one-line outputs") {
    RunResult ded = run("dedekind --a 1 --b 3 --p 2 --method exact --include-k0 false");
    CHECK(ded.exit_code == 0);
    CHECK(ded.out == "1/162\n");

    RunResult cf = run("cf --alpha 7/5 --terms 10");
    CHECK(cf.exit_code == 0);
    CHECK(cf.out == "[1; 2, 2]\n");

    RunResult disc = run("disc --alpha phi --n 1 --method exact");
    CHECK(disc.exit_code == 0);
    CHECK(disc.out.rfind("l2sq = 4/9\n", 0) == 0);
}

TEST_CASE("cli: exit codes distinguish usage, domain and bound failures") {
    CHECK(run("cf --alpha nonsense --terms 3").exit_code == 2);   // unparseable alpha
    CHECK(run("cf --terms 3").exit_code == 2);                    // missing flag
    CHECK(run("nosuchcommand").exit_code == 2);
    CHECK(run("dsum --alpha 1/3 --p 2 --n 5").exit_code == 3);    // pole in range
    CHECK(run("dedekind --a 2 --b 4 --p 2").exit_code == 3);      // not coprime
    CHECK(run("disc --alpha 1/3 --n 2 --method exact").exit_code == 3); // rational alpha
    CHECK(run("experiment nosuchsweep").exit_code == 3);
    CHECK(run("--help").exit_code == 0);
    // precision cap from the environment
    CHECK(run("dsum --alpha sqrt2 --p 2 --n 1000 --eps 1e-12", "LOWDISC_MAX_BITS=32").exit_code ==
          3);
}

TEST_CASE("cli: identical invocations are byte-identical") {
    std::string args = "dsum --alpha sqrt2 --p 2 --n 100 --eps 1e-9 --blocks";
    RunResult a = run(args), b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("cli: --json emits one parseable object per line") {
    RunResult r = run("--json disc --alpha phi --n 2 --method all");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    int objects = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        ++objects;
        if (j.contains("l2sq")) {
            CHECK(j.contains("main_term"));
            CHECK(j.contains("cor4_term"));
            CHECK(j.contains("c_log_n"));
            CHECK(j["n"] == 2);
        }
    }
    CHECK(objects >= 1);
}

TEST_CASE("cli: experiment CSVs re-validate to the same verdict") {
    std::string path = "cli_test_warnock.csv";
    RunResult r = run("experiment warnock-oracle --out " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(lowdisc::revalidate_csv("warnock-oracle", buf.str()));
    // deterministic modulo '#' comment lines (the header carries a timestamp)
    std::string path2 = "cli_test_warnock2.csv";
    run("experiment warnock-oracle --out " + path2);
    std::ifstream in2(path2);
    std::stringstream buf2;
    buf2 << in2.rdbuf();
    CHECK(strip_comments(buf.str()) == strip_comments(buf2.str()));
    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("cli: experiment bound violations exit with code 4") {
    // the quotient-term consistency sweep is a faithful implementation of a
    // claim that does not hold at the stated tolerance; it must exit 4, not 0
    RunResult r = run("experiment cor4-consistency --out cli_test_cor4.csv");
    CHECK(r.exit_code == 4);
    std::ifstream in("cli_test_cor4.csv");
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK_FALSE(lowdisc::revalidate_csv("cor4-consistency", buf.str()));
    std::remove("cli_test_cor4.csv");
}
