#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

// Compile definition pointing at the built binary; see tests/CMakeLists.txt.
#ifndef GRIESS_CLI_PATH
#error "GRIESS_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Run the CLI with the given arguments, capturing stdout.  stderr is
// dropped: the tests assert on exit codes and the JSON payload.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string("\"") + GRIESS_CLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

nlohmann::json parse(const RunResult& r) {
    REQUIRE_FALSE(r.out.empty());
    return nlohmann::json::parse(r.out);
}

struct TempPath {
    std::string path;
    explicit TempPath(const std::string& name) : path("/tmp/griess_cli_test_" + name) {}
    ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("build --lambda 13/256").exit_code == 2);  // missing --out
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("solve-lambda classifies the parameter") {
    RunResult r = run_cli("solve-lambda");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = parse(r);
    CHECK(doc["candidates"] == nlohmann::json({"1/64", "13/256", "3/16"}));
    CHECK(doc["norm_constraint_roots"] == nlohmann::json({"1/64", "13/256", "1"}));
    CHECK(doc["admissible"] == nlohmann::json({"1/64", "13/256"}));
}

TEST_CASE("build then verify round-trips through a file") {
    TempPath file("dim4.json");
    RunResult build = run_cli("build --lambda 13/256 --out " + file.path);
    CHECK(build.exit_code == 0);
    nlohmann::json doc = parse(build);
    CHECK(doc["dimension"] == 4);
    CHECK(doc["charges"]["omega1"] == "81/70");
    CHECK(doc["charges"]["omega"] == "58/35");

    RunResult verify = run_cli("verify " + file.path);
    CHECK(verify.exit_code == 0);
    nlohmann::json vdoc = parse(verify);
    CHECK(vdoc["failures"] == 0);
    CHECK(vdoc["flags"] > 0);  // the folded-in audit flags the misprints

    // Strict mode promotes flags to a failing exit.
    CHECK(run_cli("verify --strict " + file.path).exit_code == 1);
}

TEST_CASE("build rejects inadmissible parameters") {
    TempPath file("nope.json");
    CHECK(run_cli("build --lambda 3/16 --out " + file.path).exit_code == 2);
    CHECK(run_cli("build --lambda five --out " + file.path).exit_code == 2);
}

TEST_CASE("verify distinguishes broken algebras from broken files") {
    TempPath file("dim3.json");
    REQUIRE(run_cli("build --lambda 1/64 --out " + file.path).exit_code == 0);

    // Corrupt the gram diagonal in place.
    std::ifstream in(file.path);
    nlohmann::json doc = nlohmann::json::parse(in);
    in.close();
    doc["gram"][2][2] = "0";
    std::ofstream out(file.path);
    out << doc.dump();
    out.close();
    CHECK(run_cli("verify " + file.path).exit_code == 1);

    TempPath bad("malformed.json");
    std::ofstream bout(bad.path);
    bout << "{ not json";
    bout.close();
    CHECK(run_cli("verify " + bad.path).exit_code == 2);

    CHECK(run_cli("verify /tmp/griess_cli_test_missing.json").exit_code == 2);
}

TEST_CASE("audit reports the four flagged constants") {
    RunResult r = run_cli("audit");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = parse(r);
    CHECK(doc["constants"] == 36);
    CHECK(doc["flags"] == 4);
    CHECK(doc["flagged"].size() == 4);
}

TEST_CASE("series answers both query forms") {
    RunResult by_m = run_cli("series --m 1");
    CHECK(by_m.exit_code == 0);
    nlohmann::json doc = parse(by_m);
    CHECK(doc["c"] == "1/2");
    CHECK(doc["weights"] == nlohmann::json({"0", "1/16", "1/2"}));

    RunResult by_charge = run_cli("series --charge 21/22");
    CHECK(by_charge.exit_code == 0);
    nlohmann::json cdoc = parse(by_charge);
    CHECK(cdoc["found"] == true);
    CHECK(cdoc["m"] == 9);

    RunResult not_series = run_cli("series --charge 81/70");
    CHECK(not_series.exit_code == 0);
    CHECK(parse(not_series)["found"] == false);

    CHECK(run_cli("series").exit_code == 2);
    CHECK(run_cli("series --m 1 --charge 1/2").exit_code == 2);
    CHECK(run_cli("series --m -3").exit_code == 2);
}

TEST_CASE("fusion certifies the builtin tables") {
    for (const std::string& ring : {"ising", "vir_4_5", "w3_4_5", "vir_6_7_sub"}) {
        CHECK(run_cli("fusion --ring " + std::string(ring)).exit_code == 0);
        RunResult checked = run_cli("fusion --ring " + std::string(ring) + " --check");
        CHECK(checked.exit_code == 0);
        CHECK(parse(checked)["failures"] == 0);
    }
    CHECK(run_cli("fusion --ring nope").exit_code == 2);
}

TEST_CASE("pairs lists integer-weight tensor pairs") {
    RunResult r = run_cli("pairs --c1 1/2 --c2 21/22");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = parse(r);
    CHECK(doc["m1"] == 1);
    CHECK(doc["m2"] == 9);
    CHECK(doc["pairs"].size() == 6);

    CHECK(run_cli("pairs --c1 81/70 --c2 21/22").exit_code == 2);
}

TEST_CASE("decompose searches charge windows") {
    RunResult empty = run_cli("decompose --charge 81/70 --min 1/2 --max 23/35");
    CHECK(empty.exit_code == 0);
    nlohmann::json doc = parse(empty);
    CHECK(doc["count"] == 0);
    CHECK(doc["decompositions"].empty());

    RunResult split = run_cli("decompose --charge 58/35 --min 7/10 --max 6/7");
    CHECK(split.exit_code == 0);
    CHECK(parse(split)["count"] == 1);

    CHECK(run_cli("decompose --charge 2 --min 1/2 --max 1").exit_code == 2);
    CHECK(run_cli("decompose --charge 2 --min 0 --max 1/2").exit_code == 2);
}

TEST_CASE("paper-report renders deterministically in both formats") {
    RunResult first = run_cli("paper-report --format json");
    RunResult second = run_cli("paper-report --format json");
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);

    nlohmann::json doc = parse(first);
    CHECK(doc["audit"]["flagged"].size() == 4);
    CHECK(doc["fusion_rings"]["rings"].size() == 4);

    RunResult md = run_cli("paper-report --format md");
    CHECK(md.exit_code == 0);
    CHECK(md.out.rfind("# ", 0) == 0);
    CHECK(md.out == run_cli("paper-report --format md").out);

    CHECK(run_cli("paper-report --format xml").exit_code == 2);
    CHECK(run_cli("paper-report").exit_code == 2);
}
