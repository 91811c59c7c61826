#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(REGAL_CLI_PATH) + " " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    int st = pclose(f);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string ringfile(const std::string& name) {
    return std::string(REGAL_RINGS_DIR) + "/" + name + ".ring";
}

} // namespace

TEST_CASE("regcheck verdict lines and exit codes") {
    Run r = run("regcheck " + ringfile("poly2"));
    CHECK(r.code == 0);
    CHECK(r.out == "REGULAR, n=2, gldh=2\n");

    r = run("regcheck " + ringfile("xy"));
    CHECK(r.code == 0);
    CHECK(r.out.find("NOT REGULAR") == 0);

    r = run("regcheck " + ringfile("scalar"));
    CHECK(r.code == 0);
    CHECK(r.out == "REGULAR, n=0, gldh=0\n");

    r = run("regcheck " + ringfile("poly2") + " --bound 1");
    CHECK(r.code == 1);
    CHECK(r.out.find("INCONCLUSIVE") == 0);
}

TEST_CASE("betti output") {
    Run r = run("betti " + ringfile("xy") + " --steps 5");
    CHECK(r.code == 0);
    CHECK(r.out.find("totals: 1,2,2,2,2,2") != std::string::npos);

    r = run("betti " + ringfile("poly3") + " --json");
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["ring"] == "poly3");
    CHECK(doc["truncated"] == false);
    int64_t total1 = 0;
    for (const auto& row : doc["betti"])
        if (row[0] == 1) total1 += row[2].get<int64_t>();
    CHECK(total1 == 3);
}

TEST_CASE("koszul, depth and dim one-liners") {
    CHECK(run("dim " + ringfile("poly3")).out == "dim 3\n");
    CHECK(run("depth " + ringfile("noncm")).out == "depth 0\n");
    Run r = run("koszul " + ringfile("ci22"));
    CHECK(r.out.find("homology totals: 1,2,1") != std::string::npos);
    CHECK(r.out.find("depth: 0") != std::string::npos);
}

TEST_CASE("change-of-rings subcommand") {
    Run r = run("cor " + ringfile("xy") + " --g x+y --window 4 --json");
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["cor"]["tor"] == nlohmann::json({1, 1, 0, 0, 0}));
    auto ab = doc["cor"]["abutment"];
    REQUIRE(ab.size() == 5);
    for (const auto& row : ab) CHECK(row[1] == row[2]);
    CHECK(doc["findings"].empty());

    r = run("cor " + ringfile("xy") + " --g x");
    CHECK(r.code == 1);
    CHECK(r.out.find("zerodivisor") != std::string::npos);

    r = run("cor " + ringfile("noncm"));
    CHECK(r.code == 1);
    CHECK(r.out.find("nzd-search") != std::string::npos);
}

TEST_CASE("input failures exit 2") {
    CHECK(run("regcheck /nonexistent/missing.ring").code == 2);
    CHECK(run("betti " + ringfile("xy") + " --wat").code == 2);
    CHECK(run("").code == 2);

    std::string bad = "/tmp/regal-cli-badfield.ring";
    {
        FILE* f = fopen(bad.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("field 6\nvars x\n", f);
        fclose(f);
    }
    Run r = run("regcheck " + bad);
    CHECK(r.code == 2);
    CHECK(r.out.find("line 1") != std::string::npos);
    remove(bad.c_str());
}

TEST_CASE("json output is byte stable") {
    std::string args = "corpus " + std::string(REGAL_RINGS_DIR) + " --json";
    Run a = run(args);
    Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["corpus"].size() == 12);
    CHECK(doc["errors"] == 0);
    CHECK(doc["findings"] == 0);
}

TEST_CASE("regcheck json document shape") {
    Run r = run("regcheck " + ringfile("dual") + " --json");
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["ring"] == "dual");
    CHECK(doc["n"] == 0);
    CHECK(doc["conditions"]["a"]["finite"] == false);
    CHECK(doc["conditions"]["b"] == false);
    CHECK(doc["consistent"] == true);
    CHECK(doc["inconclusive"] == false);
}
