#include "doctest.h"

#include "config.cpp" // tools translation unit, compiled into the test

using namespace hypoheat::cli;

TEST_CASE("config parsing") {
    auto c = parse_config("command = list-models\n");
    CHECK(c.command == "list-models");
    CHECK(c.steps == 4096);
    CHECK(c.paths == 10000);
    CHECK(c.seed == 0);
    auto c2 = parse_config("command = simulate\nmodel = chopf(2)\nt = 1.0\n");
    CHECK(c2.model == "chopf(2)");
    // round trip through serialization
    auto c3 = parse_config(c2.serialize());
    CHECK(c3.model == c2.model);
    CHECK(c3.t == c2.t);
    CHECK(c3.command == c2.command);
    // unknown key names the key and line
    try {
        parse_config("foo = 1\n");
        CHECK(false);
    } catch (const std::exception& ex) {
        const std::string msg = ex.what();
        CHECK(msg.find("foo") != std::string::npos);
        CHECK(msg.find("line 1") != std::string::npos);
    }
    CHECK_THROWS(parse_config("command = simulate\n")); // missing model
    CHECK_THROWS(parse_config("command = verify\n"));   // missing suite
    CHECK_THROWS(parse_config("command = bogus\n"));
    CHECK_THROWS(parse_config("command = cf\nmodel = chopf(1)\nt = abc\n"));
}
