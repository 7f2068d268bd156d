#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout only
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(SURFACT_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

} // namespace

TEST_CASE("classify --genus 12 --lambda 5 --format json") {
    RunResult r = run("classify --genus 12 --lambda 5 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"orbit_count\": 4") != std::string::npos);
    CHECK(r.output.find("\"existence\": true") != std::string::npos);
}

TEST_CASE("classify rejects a composite q with exit 2") {
    RunResult r = run("classify --genus 9 --lambda 5");
    CHECK(r.exit_code == 2);
}

TEST_CASE("classify --genus 14 --lambda 6 reports the genus-14 caveat") {
    RunResult r = run("classify --genus 14 --lambda 6 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("genus 14") != std::string::npos);
    CHECK(r.output.find("PSL(2,13)") != std::string::npos);
}

TEST_CASE("nonexistent genus still exits 0") {
    RunResult r = run("classify --genus 14 --lambda 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("existence: no") != std::string::npos);
}

TEST_CASE("vectors and jacobian subcommands") {
    RunResult v = run("vectors --genus 8 --lambda 6 --format json");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("\"cases\"") != std::string::npos);

    RunResult j = run("jacobian --genus 8 --lambda 6");
    CHECK(j.exit_code == 0);
    CHECK(j.output.find("J(S/<cz>)^6") != std::string::npos);
}

TEST_CASE("verify over an empty prime range exits 0") {
    RunResult r = run("verify --q-range 4..4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all assertions passed") != std::string::npos);
}

TEST_CASE("verify over 7..7 asserts the genus-8 counts") {
    RunResult r = run("verify --q-range 7..7");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all assertions passed") != std::string::npos);
}

TEST_CASE("verify beyond the ceiling exits 3") {
    RunResult r = run("verify --q-range 7..202");
    CHECK(r.exit_code == 3);
}

TEST_CASE("JSON output is byte-identical across worker counts") {
    RunResult a = run("classify --genus 8 --lambda 6 --format json --workers 1");
    RunResult b = run("classify --genus 8 --lambda 6 --format json --workers 3");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("unknown flags are a user error") {
    RunResult r = run("classify --genus 12 --lambda 5 --frobnicate");
    CHECK(r.exit_code == 2);
}

TEST_CASE("a tight vector cap is a resource error, exit 3") {
    RunResult r = run("classify --genus 8 --lambda 6 --max-vectors 10");
    CHECK(r.exit_code == 3);
}
