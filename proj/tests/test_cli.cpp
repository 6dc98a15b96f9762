#include <doctest.h>

#include <sstream>

#include "asorder/cli.hpp"

using namespace asorder;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(const RunConfig& cfg) {
    std::ostringstream out, err;
    int code = run_command(cfg, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("run config round-trips through JSON") {
    RunConfig cfg;
    cfg.command = "bound";
    cfg.p = 5;
    cfg.n = 2;
    cfg.a = "1";
    cfg.b = "0,1";
    cfg.s = 2;
    cfg.t = 1;
    cfg.epsilon = 0.25;
    cfg.output = "json";
    cfg.order_guard_bits = 40;
    cfg.enum_cap = 1234;
    cfg.p_list = {3, 5};
    cfg.n_list = {1, 2};
    RunConfig back = config_from_json(config_to_json(cfg));
    CHECK(config_to_json(back) == config_to_json(cfg));
}

TEST_CASE("census command") {
    RunConfig cfg;
    cfg.command = "census";
    cfg.p = 2;
    cfg.n = 6;
    cfg.output = "json";
    auto res = run(cfg);
    CHECK(res.code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["g"]["6"] == "54");
    CHECK(j["p"] == "2");
    CHECK(j["flags"].empty());

    // boundary equality at (3,2) surfaces as a flag and exit 2
    cfg.p = 3;
    cfg.n = 2;
    auto res2 = run(cfg);
    CHECK(res2.code == 2);
    Json j2 = Json::parse(res2.out);
    CHECK(j2["flags"][0] == "BOUNDARY_EQUALITY");
    CHECK(j2["probExact"] == "2/3");
}

TEST_CASE("verify command raises the discrepancy exit code") {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.p = 3;
    cfg.n = 1;
    cfg.a = "1";
    cfg.b = "0";
    cfg.output = "json";
    auto res = run(cfg);
    CHECK(res.code == 2);
    Json j = Json::parse(res.out);
    CHECK(j["order"] == "13");
    CHECK(j["exactBound"] == "13");
    bool found = false;
    for (const auto& f : j["flags"])
        if (f == "CLOSED_FORM_EXCEEDS_EXACT") found = true;
    CHECK(found);
}

TEST_CASE("construct command") {
    RunConfig cfg;
    cfg.command = "construct";
    cfg.p = 3;
    cfg.n = 2;
    cfg.a = "1";
    cfg.output = "json";
    auto res = run(cfg);
    CHECK(res.code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["q"] == "9");
    CHECK(j["modulus"] == "1,0,1");
    CHECK(j["unitGroupOrder"] == "728");
    CHECK(j["frobeniusIdentity"] == true);
    CHECK(j["method"] == "degree-coprime");
}

TEST_CASE("table command reproduces all rows") {
    RunConfig cfg;
    cfg.command = "table";
    cfg.output = "json";
    auto res = run(cfg);
    CHECK(res.code == 0);
    Json j = Json::parse(res.out);
    CHECK(j["allMatch"] == true);
    CHECK(j["rows"].size() == 8);
    CHECK(j["provenance"] == "reconstructed");
}

TEST_CASE("bound command with explicit budgets") {
    RunConfig cfg;
    cfg.command = "bound";
    cfg.p = 3;
    cfg.n = 2;
    cfg.s = 1;
    cfg.t = 1;
    cfg.output = "json";
    auto res = run(cfg);
    Json j = Json::parse(res.out);
    CHECK(j["exactBest"] == "43");
    CHECK(j["requested"]["exact"] == "43");
    CHECK(j["requested"]["binom"] == "42");
}

TEST_CASE("sweep command emits rows in input order") {
    RunConfig cfg;
    cfg.command = "sweep";
    cfg.p_list = {3};
    cfg.n_list = {1};
    cfg.a = "1";
    cfg.output = "json";
    auto res = run(cfg);
    CHECK(res.code == 2);  // the printed prime-case constant fails at p = 3
    Json j = Json::parse(res.out);
    REQUIRE(j["instances"].size() == 3);
    CHECK(j["instances"][0]["instance"]["b"] == "0");
    CHECK(j["instances"][1]["instance"]["b"] == "1");
    CHECK(j["instances"][2]["instance"]["b"] == "2");
    for (const auto& row : j["instances"]) CHECK(row["order"] == "13");
}

TEST_CASE("identical configs produce byte-identical output") {
    RunConfig cfg;
    cfg.command = "sweep";
    cfg.p_list = {3, 5};
    cfg.n_list = {1, 2};
    cfg.a = "1";
    cfg.output = "json";
    auto first = run(cfg);
    auto second = run(cfg);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
}

TEST_CASE("usage errors exit 1") {
    RunConfig cfg;
    cfg.command = "no-such-command";
    auto res = run(cfg);
    CHECK(res.code == 1);
    CHECK_FALSE(res.err.empty());

    cfg.command = "bound";
    cfg.p = 4;  // not prime
    cfg.n = 1;
    auto res2 = run(cfg);
    CHECK(res2.code == 1);
}
