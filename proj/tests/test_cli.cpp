#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

using adelic::cli::runCommand;

namespace {
struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = runCommand(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }
}  // namespace

TEST_CASE("norms and characters") {
    const Run n = run({"norm", "-r", "12", "-p", "2"});
    CHECK(n.code == 0);
    CHECK(contains(n.out, "\"value\":\"1/4\""));
    const Run prod = run({"norm", "-r", "-35/12"});
    CHECK(prod.code == 0);
    CHECK(contains(prod.out, "\"check\":\"norm-product\""));
    CHECK(contains(prod.out, "\"pass\":true"));
    CHECK(run({"norm", "-r", "5", "-p", "inf"}).out.find("\"value\":\"5\"") != std::string::npos);
    CHECK(run({"chi", "-r", "7/12"}).code == 0);
    CHECK(contains(run({"frac", "-r", "7/12", "-p", "2"}).out, "\"value\":\"1/4\""));
}

TEST_CASE("check commands pass on known inputs") {
    CHECK(run({"product-check", "-a", "3/4", "-b", "1/2"}).code == 0);
    CHECK(run({"lambda-check", "-a", "-6/7"}).code == 0);
    CHECK(run({"zeta-fe", "--alpha", "0.4,0"}).code == 0);
    CHECK(run({"tate", "--alpha", "0.3,2"}).code == 0);
    CHECK(run({"gauss", "-p", "5", "-a", "1", "-b", "0"}).code == 0);
    CHECK(run({"pair", "--dist", "delta"}).code == 0);
    const Run mellin = run({"mellin", "--alpha", "2"});
    CHECK(mellin.code == 0);
    CHECK(contains(mellin.out, "measured_constant"));
    CHECK(run({"oscillator-check", "-p", "5", "-t", "5"}).code == 0);
}

TEST_CASE("a flagged Gauss integral fails the check") {
    const Run r = run({"gauss", "-p", "3", "-a", "1/9", "-b", "1/27", "--sphere-range", "1"});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "\"pass\":false"));
    CHECK(contains(r.out, "\"flag\""));
}

TEST_CASE("bad arguments exit with 2") {
    const Run bad = run({"norm", "-r", "abc"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
    CHECK(run({"norm", "-r", "3", "-p", "4"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"mellin", "--alpha", "1"}).code == 2);
    CHECK(run({"suite", "--only", "nowhere"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"pair", "--dist", "chi-quad", "-a", "3/4", "-b", "1/2"};
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("suite subset") {
    const Run table = run({"suite", "--only", "qcore"});
    CHECK(table.code == 0);
    CHECK(contains(table.out, "criterion 1: PASS"));
    CHECK(contains(table.out, "2/2 criteria passed"));
    const Run json = run({"--json", "suite", "--only", "qcore"});
    CHECK(contains(json.out, "\"check\":\"suite\""));
}

TEST_CASE("precision from the environment") {
    ::setenv("ADELIC_PRECISION", "2", 1);
    const Run coarse = run({"oscillator-check", "-p", "5", "-t", "5"});
    ::unsetenv("ADELIC_PRECISION");
    const Run fine = run({"oscillator-check", "-p", "5", "-t", "5"});
    CHECK(contains(coarse.out, "\"precision\":2"));
    CHECK(coarse.code == 1);
    CHECK(contains(coarse.out, "\"flag\""));
    CHECK(contains(fine.out, "\"precision\":20"));
}
