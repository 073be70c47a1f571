// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "leja/errors.hpp"
#include "leja/io.hpp"

using namespace leja;

TEST_CASE("number formatting") {
    CHECK(fmt_num(0.5) == "0.5");
    CHECK(fmt_num(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(fmt_num(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(std::stod(fmt_num(0.1)) == 0.1);
    CHECK(std::stod(fmt_num(M_PI)) == M_PI);
}

TEST_CASE("set specs") {
    const auto k = parse_set_spec(std::string(R"({"intervals": [[2, 3], [0, 1]]})"));
    REQUIRE(k.size() == 2);
    CHECK(k[0].lo == 0.0);
    const auto c = parse_set_spec(std::string(R"({"cantor": {"depth": 2, "ratio": 0.3333}})"));
    CHECK(c.size() == 4);
    CHECK(parse_set_spec(set_to_json(k)) == k);
    for (const char* bad : {"{", "[]", R"({"intervals": 3})", R"({"intervals": [[1]]})",
                            R"({"intervals": [["a", 1]]})", R"({"cantor": {"depth": 1.5, "ratio": 0.3}})",
                            R"({"cantor": {"depth": 2}})", R"({"other": 1})", R"({"intervals": [[1, 1]]})"}) {
        CHECK_THROWS_AS((void)parse_set_spec(std::string(bad)), ValidationError);
    }
}

TEST_CASE("csv writers") {
    PointSequence s;
    s.points = {1.0, -1.0, 0.0};
    std::ostringstream os;
    write_sequence_csv(os, s);
    CHECK(os.str() == "index,x\n0,1\n1,-1\n2,0\n");

    BoundReport r;
    r.delta_grid = {0.1};
    r.G_values = {0.2};
    r.bound_values = {std::numeric_limits<double>::infinity()};
    std::ostringstream ob;
    write_bound_csv(ob, r);
    CHECK(ob.str() == "delta,G,bound\n0.10000000000000001,0.20000000000000001,inf\n");

    std::ostringstream op;
    write_profile_csv(op, {{0.5, 1.25}});
    CHECK(op.str() == "x,lambda(x)\n0.5,1.25\n");
}

TEST_CASE("instances round-trip") {
    const ITauInstance inst({0.0, 1.0, -2.0}, 0.5);
    const auto back = instance_from_json(instance_to_json(inst));
    CHECK(std::vector<double>(back.xs().begin(), back.xs().end()) == std::vector<double>{0.0, 1.0, -2.0});
    CHECK(back.tau() == 0.5);
    const auto many = instances_from_json(Json::parse(R"({"instances": [{"xs": [0, 1]}, {"xs": [0, 2, 3], "tau": 0.9}]})"));
    CHECK(many.size() == 2);
    CHECK(many[0].tau() == 1.0);
    CHECK_THROWS_AS((void)instances_from_json(Json::parse(R"([{"xs": [0, 0]}])")), ValidationError);
    CHECK_THROWS_AS((void)instances_from_json(Json::parse(R"([{"x": [0, 1]}])")), ValidationError);
    CHECK_THROWS_AS((void)instances_from_json(Json::parse(R"(5)")), ValidationError);
}
