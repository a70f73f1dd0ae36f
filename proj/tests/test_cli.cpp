#include "cli_app.hpp"

#include <json.hpp>

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::initializer_list<const char*> args) {
    std::vector<const char*> argv = {"loopalg"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int code = loopalg::cli::run(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("kappa command") {
    RunResult r = run({"--genus", "1", "--boundaries", "2", "kappa", "a1", "b1"});
    CHECK(r.code == 0);
    CHECK(r.out == "b1 ⊗ a1\n");
}

TEST_CASE("mu command") {
    RunResult r = run({"--genus", "1", "--boundaries", "2", "mu", "d1"});
    CHECK(r.code == 0);
    CHECK(r.out == "3*|1_0| ⊗ d1 - 2*d1 ⊗ |1_0|\n");
}

TEST_CASE("phi, delta, modular and ham commands") {
    CHECK(run({"phi", "a1"}).out == "-|1_0| ⊗ a1 + 1_0 ⊗ |a1|\n");
    CHECK(run({"delta", "a1"}).out == "0\n");
    CHECK(run({"modular", "d1"}).out == "0\n");
    CHECK(run({"ham", "a1", "b1"}).out == "b1 a1\n");
}

TEST_CASE("global flags may trail the subcommand") {
    RunResult r = run({"mu", "d1", "--genus", "2", "--boundaries", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "5*|1_0| ⊗ d1 - 4*d1 ⊗ |1_0|\n");
}

TEST_CASE("json format") {
    RunResult r = run({"--format", "json", "kappa", "a1", "b1"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.is_array());
    CHECK(j.size() == 1);
    CHECK(j[0][0] == "b1");
    CHECK(j[0][1] == "a1");
    CHECK(j[0][2] == "1");
}

TEST_CASE("theta-table driven tdiv and div") {
    // theta = del_{a1}: tdiv = |1_0| (x) a1^-1, div = |1_0| (x) |a1^-1|
    const char* theta = R"({"a1": [["1_0", "1_0", 1]]})";
    RunResult t = run({"tdiv", "--theta", theta});
    CHECK(t.code == 0);
    CHECK(t.out == "|1_0| ⊗ a1^-1\n");
    RunResult d = run({"div", "--theta", theta});
    CHECK(d.code == 0);
    CHECK(d.out == "|1_0| ⊗ |a1^-1|\n");

    // ill-typed tables are rejected
    RunResult bad = run({"tdiv", "--theta", R"({"d1": [["1_0", "1_0", 1]]})"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("ill-typed") != std::string::npos);
}

TEST_CASE("tensor subcommands") {
    const char* pairing = R"({"dim": 2, "entries": [[0, 1], [-1, 0]]})";
    RunResult b = run({"tensor", "bracket", "w1", "w2", "--pairing", pairing});
    CHECK(b.code == 0);
    CHECK(b.out == "1_0 ⊗ 1_0\n");
    RunResult p = run({"tensor", "phi", "w1", "--pairing", pairing});
    CHECK(p.code == 0);
    CHECK(p.out == "0\n");
    RunResult d = run({"tensor", "delta", "w1 w2", "--pairing", pairing});
    CHECK(d.code == 0);
}

TEST_CASE("verify runs and is deterministic") {
    RunResult r1 = run({"verify", "--suite", "defect", "--seed", "7", "--samples", "20"});
    RunResult r2 = run({"verify", "--suite", "defect", "--seed", "7", "--samples", "20"});
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("suite defect: PASS") != std::string::npos);
    CHECK(r1.out.find("seed=7") != std::string::npos);

    RunResult j = run({"verify", "--suite", "defect", "--seed", "7", "--samples", "5",
                       "--format", "json"});
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["suite"] == "defect");
    CHECK(parsed["seed"] == 7);
    CHECK(parsed["samples"] == 5);
    CHECK(parsed["cases"].is_array());
    for (const auto& c : parsed["cases"])
        CHECK(c["pass"] == true);
}

TEST_CASE("verify exit code reflects failures") {
    // the deliberately wrong framing: rot(d_j) = 0 makes the main theorem fail on d1
    RunResult r = run({"verify", "--suite", "main-theorem", "--samples", "1", "--delta-rot",
                       "0"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("w=d1") != std::string::npos);
}

TEST_CASE("verify writes a report file") {
    const char* path = "cli_report_test.json";
    RunResult r = run({"verify", "--suite", "defect", "--samples", "3", "--seed", "9",
                       "--report", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json rep;
    in >> rep;
    CHECK(rep["suite"] == "defect");
    CHECK(rep["seed"] == 9);
    CHECK(rep["samples"] == 3);
    in.close();
    std::remove(path);
}

TEST_CASE("help exits cleanly") {
    RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("kappa") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"kappa", "a1"}).code == 2);               // missing argument
    CHECK(run({"frobnicate"}).code == 2);                // unknown subcommand
    CHECK(run({"kappa", "a1", "q9"}).code == 2);         // parse error
    CHECK(run({"verify", "--suite", "nope"}).code == 2); // unknown suite
    CHECK(run({"--genus", "0", "--boundaries", "0", "kappa", "a1", "a1"}).code == 2);
    RunResult r = run({"--genus", "0", "--boundaries", "2", "kappa", "a1", "a1"});
    CHECK(r.code == 2); // a1 does not exist on a genus-0 surface
    CHECK(r.err.find("error:") != std::string::npos);
}
