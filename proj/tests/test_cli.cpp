#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += KOSZUL_CLI_PATH;
    cmd += " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t k;
    while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("hilbert by formula") {
    RunResult r = run_cli("hilbert --family line --n 3 --algebra bdual --method formula");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "graph: n=3; edges=(2,1)(3,2)\n"
          "algebra: bdual\n"
          "method: formula\n"
          "degree: 3\n"
          "series: 1 + 5z + 5z^2 + z^3\n"
          "coeffs: 1,5,5,1\n");
}

TEST_CASE("hilbert by inversion") {
    RunResult r = run_cli("hilbert --family triangle --algebra q --method inversion --degree 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "series: 1 + 6z + 31z^2 + 157z^3"));
    CHECK(contains(r.out, "coeffs: 1,6,31,157"));
}

TEST_CASE("hilbert by completion with a graph6 source") {
    RunResult r = run_cli("hilbert --graph6 Bw --algebra qdual --method gb --degree 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "coeffs: 1,6,5,1"));
}

TEST_CASE("class violation exits 1") {
    RunResult r = run_cli("hilbert --family butterfly --algebra bdual --method formula");
    CHECK(r.code == 1);
    CHECK(contains(r.out, "class violation"));
}

TEST_CASE("forced formula reports agreement without asserting") {
    RunResult r = run_cli("hilbert --family butterfly --algebra bdual --method formula --force");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "coeffs: 1,11,31,27,9,1"));
    CHECK(contains(r.out, "comparison: completion coeffs 1,11,31,27,9,1"));
    CHECK(contains(r.out, "agreement: yes"));
}

TEST_CASE("info prints class flags") {
    RunResult butterfly = run_cli("info --family butterfly");
    CHECK(butterfly.code == 0);
    CHECK(contains(butterfly.out, "triangles: (3,2,1)(5,4,1)"));
    CHECK(contains(butterfly.out, "overlap_free: no"));

    RunResult star = run_cli("info --family star --n 6");
    CHECK(star.code == 0);
    CHECK(contains(star.out, "triangle_free: yes"));
    CHECK(contains(star.out, "triangles: none"));
}

TEST_CASE("bad edge file exits 2 with the line number") {
    const char* path = "cli_bad_edges.txt";
    {
        std::ofstream f(path);
        f << "3\n1 1\n";
    }
    RunResult r = run_cli(std::string("info --edges ") + path);
    std::remove(path);
    CHECK(r.code == 2);
    CHECK(contains(r.out, "line 2"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("info").code == 2);
    CHECK(run_cli("info --family line --n 3 --graph6 Bg").code == 2);
    CHECK(run_cli("info --family nosuch --n 3").code == 2);
    CHECK(run_cli("hilbert --family line --n 3 --algebra q --method formula").code == 2);
    CHECK(run_cli("hilbert --family line --n 3 --algebra qdual --method inversion").code == 2);
    CHECK(run_cli("hilbert --family line --n 3 --algebra z --method gb").code == 2);
    CHECK(run_cli("verify nonsense").code == 2);
    CHECK(run_cli("--bogus-flag").code == 2);
    CHECK(run_cli("").code == 2);
}

TEST_CASE("degree budget environment override") {
    RunResult capped = run_cli("hilbert --family line --n 3 --algebra q --method gb",
                               "KOSZUL_DEGREE_BUDGET=3");
    CHECK(capped.code == 0);
    CHECK(contains(capped.out, "degree: 3"));
    CHECK(contains(capped.out, "coeffs: 1,5,20,76"));

    RunResult refused = run_cli("hilbert --family line --n 3 --algebra q --method gb --degree 4",
                                "KOSZUL_DEGREE_BUDGET=3");
    CHECK(refused.code == 2);
    CHECK(contains(refused.out, "exceeds budget"));

    CHECK(run_cli("hilbert --family line --n 3 --algebra q --method gb",
                  "KOSZUL_DEGREE_BUDGET=abc")
              .code == 2);
}

TEST_CASE("verify suite output and exit code") {
    RunResult r = run_cli("verify dim3 --max-n 3");
    CHECK(r.code == 0);
    CHECK(r.out == "suite dim3: max_n 3, 3 graphs, 3 checks, 0 failures\n");

    RunResult all = run_cli("verify all --max-n 3");
    CHECK(all.code == 0);
    for (const char* name :
         {"dim3", "gb-quadratic", "koszul", "palindrome", "dual-match", "frobenius"})
        CHECK(contains(all.out, std::string("suite ") + name + ":"));
}

TEST_CASE("json outputs parse and are deterministic") {
    RunResult r = run_cli("verify dim3 --max-n 3 --json");
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["graph_count"] == 3);
    CHECK(j["all_pass"] == true);
    CHECK(j["rows"].size() == 3);

    RunResult again = run_cli("verify dim3 --max-n 3 --json");
    CHECK(again.out == r.out);

    RunResult h = run_cli("hilbert --family line --n 3 --algebra bdual --method formula --json");
    CHECK(h.code == 0);
    nlohmann::json hj = nlohmann::json::parse(h.out);
    CHECK(hj["coeffs"] == nlohmann::json::array({1, 5, 5, 1}));
    CHECK(hj["series"] == "1 + 5z + 5z^2 + z^3");

    RunResult i = run_cli("info --family triangle --json");
    CHECK(i.code == 0);
    nlohmann::json ij = nlohmann::json::parse(i.out);
    CHECK(ij["triangle_free"] == false);
    CHECK(ij["overlap_free"] == true);
    CHECK(ij["triangles"].size() == 1);
}
