#include <catch2/catch_amalgamated.hpp>
#include <drg/generators.hpp>
#include <drg/graph.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

// drives the installed binary end to end through a shell
namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& redirect = "") {
    const std::string cmd = std::string(DRGCHECK_BIN) + " " + args + " 2>/dev/null" + redirect;
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& content) {
    static int counter = 0;
    const std::string path =
        "/tmp/drgcli_" + std::to_string(getpid()) + "_" + std::to_string(counter++) + ".txt";
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("text report certifies the Petersen graph") {
    RunResult r = run("analyze --family petersen --output text");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("DISTANCE-REGULAR (oracle) — certified by:") != std::string::npos);
    REQUIRE(r.out.find("intersection array: {3,2;1,1}") != std::string::npos);
    REQUIRE(r.out.find("girth: 5") != std::string::npos);
}

TEST_CASE("json report carries the oracle verdict and the arrays") {
    RunResult r = run("analyze --family petersen");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["oracle"]["is_drg"] == true);
    REQUIRE(j["oracle"]["intersection_array"]["b"] == nlohmann::json::array({3, 2}));
    REQUIRE(j["oracle"]["intersection_array"]["c"] == nlohmann::json::array({1, 1}));
    REQUIRE(j["oracle"]["witness"].is_null());
    REQUIRE(j["internal_consistency_ok"] == true);
    REQUIRE(j["criteria"].size() == 9);
    for (const auto& c : j["criteria"]) REQUIRE(c["verdict"] == "certified");
}

TEST_CASE("json output is byte-identical across runs") {
    RunResult a = run("analyze --family hypercube --params 4");
    RunResult b = run("analyze --family hypercube --params 4");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE_FALSE(a.out.empty());
}

TEST_CASE("edge list input is auto-detected") {
    const std::string path = temp_file(drg::write_edge_list(drg::petersen()));
    RunResult r = run("analyze --input " + path);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["graph"]["n"] == 10);
    REQUIRE(j["oracle"]["is_drg"] == true);
}

TEST_CASE("graph6 input is read from stdin by default") {
    const std::string path = temp_file(drg::encode_graph6(drg::cycle(6)) + "\n");
    RunResult r = run("analyze", " < " + path);
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["graph"]["n"] == 6);
    REQUIRE(j["graph"]["bipartite"] == true);
}

TEST_CASE("exit codes separate format, unsupported, and consistency failures") {
    // malformed graph6: format error
    REQUIRE(run("analyze", " < " + temp_file("Bww\n")).exit_code == 2);
    // disconnected graph: unsupported
    REQUIRE(run("analyze --input " + temp_file("4\n0 1\n2 3\n")).exit_code == 3);
    // trivial one-vertex graph: unsupported
    REQUIRE(run("analyze --input " + temp_file("1\n")).exit_code == 3);
    // too large for dense analysis: unsupported
    REQUIRE(run("analyze --family cycle --params 5000").exit_code == 3);
    // zero tolerance: unsupported configuration
    REQUIRE(run("analyze --family petersen --tol-eq 0").exit_code == 3);
}

TEST_CASE("a loosened band that fools a criterion exits with the consistency code") {
    const std::string path =
        temp_file(drg::encode_graph6(drg::strong_product(drg::hypercube(3), drg::complete(2))) + "\n");
    RunResult strict = run("analyze --input " + path);
    REQUIRE(strict.exit_code == 0);
    auto js = nlohmann::json::parse(strict.out);
    REQUIRE(js["oracle"]["is_drg"] == false);

    RunResult loose = run("analyze --tol-eq 5.0 --input " + path);
    REQUIRE(loose.exit_code == 4);
    auto jl = nlohmann::json::parse(loose.out);
    REQUIRE(jl["internal_consistency_ok"] == false);
    bool gate = false;
    for (const auto& f : jl["flags"])
        gate = gate || f.get<std::string>().rfind("oracle-gate:", 0) == 0;
    REQUIRE(gate);
}

TEST_CASE("tolerances reach the report from flag and environment") {
    RunResult flag = run("analyze --family petersen --tol-eq 0.5");
    auto jf = nlohmann::json::parse(flag.out);
    REQUIRE(jf["tolerances"]["eq_band"] == 0.5);

    const std::string cmd = std::string("TOL_EQ=0.25 ") + DRGCHECK_BIN +
                            " analyze --family petersen 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    pclose(p);
    auto je = nlohmann::json::parse(out);
    REQUIRE(je["tolerances"]["eq_band"] == 0.25);
}

TEST_CASE("batch keeps input order and isolates per-line failures") {
    const std::string input = drg::encode_graph6(drg::petersen()) + "\n" +
                              "!!!\n" +
                              drg::encode_graph6(drg::complete(3)) + "\n";
    RunResult r = run("batch --jobs 2", " < " + temp_file(input));
    REQUIRE(r.exit_code == 0);
    std::vector<std::string> lines;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    REQUIRE(lines.size() == 3);

    auto j1 = nlohmann::json::parse(lines[0]);
    REQUIRE(j1["graph"]["name"] == "line 1");
    REQUIRE(j1["graph"]["n"] == 10);
    REQUIRE(j1["oracle"]["is_drg"] == true);

    auto j2 = nlohmann::json::parse(lines[1]);
    REQUIRE(j2["graph"]["name"] == "line 2");
    REQUIRE(j2.contains("error"));
    REQUIRE_FALSE(j2.contains("oracle"));

    auto j3 = nlohmann::json::parse(lines[2]);
    REQUIRE(j3["graph"]["name"] == "line 3");
    REQUIRE(j3["graph"]["n"] == 3);
}

TEST_CASE("an empty batch is a clean no-op") {
    RunResult r = run("batch", " < " + temp_file(""));
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.empty());
}

TEST_CASE("generate emits both formats and round-trips through analyze") {
    RunResult g6 = run("generate --family hypercube --params 3 --format graph6");
    REQUIRE(g6.exit_code == 0);
    const std::string path = temp_file(g6.out);
    RunResult rt = run("analyze --input " + path);
    REQUIRE(rt.exit_code == 0);
    auto j = nlohmann::json::parse(rt.out);
    REQUIRE(j["graph"]["n"] == 8);
    REQUIRE(j["oracle"]["intersection_array"]["b"] == nlohmann::json::array({3, 2, 1}));
    REQUIRE(j["oracle"]["intersection_array"]["c"] == nlohmann::json::array({1, 2, 3}));

    RunResult el = run("generate --family petersen");
    REQUIRE(el.exit_code == 0);
    REQUIRE(el.out.rfind("10\n", 0) == 0);  // edge list starts with the order line
    auto parsed = drg::parse_edge_list(el.out, "generated");
    REQUIRE(parsed.order() == 10);
    REQUIRE(parsed.size() == 15);
}

TEST_CASE("fixtures load through the family interface") {
    const std::string dir = std::string(DRG_SOURCE_ROOT) + "/data/fixtures";
    RunResult r = run("analyze --family fixture --params " + dir + "/perkel.el");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["graph"]["n"] == 57);
    REQUIRE(j["oracle"]["is_drg"] == true);
    REQUIRE(j["oracle"]["intersection_array"]["b"] == nlohmann::json::array({6, 5, 2}));

    RunResult h = run("analyze --output text --family fixture --params " + dir + "/hoffman.el");
    REQUIRE(h.exit_code == 0);
    REQUIRE(h.out.find("NOT DISTANCE-REGULAR (oracle)") != std::string::npos);
    REQUIRE(h.out.find("witness") != std::string::npos);
}

TEST_CASE("unknown families and bad parameters are format errors") {
    REQUIRE(run("analyze --family moebius").exit_code == 2);
    REQUIRE(run("generate --family cycle --params 2").exit_code == 2);
    REQUIRE(run("generate --family cycle --params 5,6").exit_code == 2);
}
