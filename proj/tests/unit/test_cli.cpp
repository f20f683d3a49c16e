#include "tadic/cli.hpp"

#include <doctest.h>

#include <sstream>

using tadic::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string golden = TADIC_GOLDEN_DIR;

} // namespace

TEST_CASE("division output")
{
    Run r = run({"wdiv", "--f", "(1+t)*Y1 - t", "--g", "Y1", "--precision", "4"});
    CHECK(r.code == 0);
    CHECK(r.out
          == "q = (1 - t + t^2 - t^3) (mod t^4)\n"
             "r = (t - t^2 + t^3) (mod t^4)\n"
             "q=(1 - t + t^2 - t^3) (mod t^4); r=(t - t^2 + t^3) (mod t^4); check=OK\n");
}

TEST_CASE("exit codes")
{
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"wdiv", "--f", "Y1 +", "--g", "Y1", "--precision", "3"}).code == 2);
    CHECK(run({"wdiv", "--f", "t*Y1", "--g", "Y1", "--precision", "3"}).code == 2);
    CHECK(run({"check", "--precision", "3", "--formula", "t + t^2 - t*(1 + t) = 0"}).code == 3);
    CHECK(run({"eval", "--precision", "3", "--term", "D(1, t + t^2 - t*(1 + t))"}).code == 3);
    CHECK(run({"eval", "--precision", "3", "--term", "1/(0)"}).code == 2);
    CHECK(run({"eval", "--precision", "3", "--registry", golden + "/missing.reg", "--term", "1"}).code == 2);
    CHECK(run({"uninorm", "--g", "0 (mod t^3)"}).code == 3);
    Run q = run({"check", "--precision", "3", "--formula", "forall x (x = x)"});
    CHECK(q.code == 2);
    CHECK(q.err.find("1:1:") != std::string::npos);
}

TEST_CASE("registry and environment files")
{
    Run r = run({"eval", "--precision", "4", "--registry", golden + "/geo.reg", "--env", golden + "/points.env",
                 "--term", "geo(one)"});
    CHECK(r.code == 0);
    CHECK(r.out.find("value = 1 + t + t^2 + t^3 (mod t^4)\n") != std::string::npos);
}
