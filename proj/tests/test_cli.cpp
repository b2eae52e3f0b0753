#include "doctest.h"

#include "cmlab/errors.hpp"
#include "cmlab/runner.hpp"
#include "cmlab/scenario.hpp"

using namespace cmlab;
using namespace cmlab::cli;

TEST_SUITE("cli") {

TEST_CASE("bundled scenarios parse and round trip") {
    auto& all = bundled_scenarios();
    REQUIRE(all.size() == 7);
    for (const auto& [name, text] : all) {
        auto sc = parse_scenario(text);
        CHECK(sc.name == name);
        auto again = parse_scenario(sc.str());
        CHECK(again.str() == sc.str());
        CHECK(again.name == sc.name);
        CHECK(again.checks.size() == sc.checks.size());
    }
}

TEST_CASE("bundled lookup by name") {
    CHECK(find_bundled("paper/example_3_7") != nullptr);
    CHECK(find_bundled("paper/bad_ring") != nullptr);
    CHECK(find_bundled("paper/nope") == nullptr);
}

TEST_CASE("numeric options canonicalize into the parens") {
    auto sc = parse_scenario("scenario t\nring QQ[x, y]\ncheck wpr (x, y) bound 4\n");
    REQUIRE(sc.checks.size() == 1);
    CHECK(sc.checks[0].str() == "check wpr (x, y, bound=4)");
    auto sc2 = parse_scenario("scenario t\nring QQ[x]\ncheck presentation () degree 3 expect presented\n");
    CHECK(sc2.checks[0].str() == "check presentation (degree=3) expect presented");
}

TEST_CASE("inline form takes the ring first") {
    auto sc = parse_scenario("valuation(rank=2); example37(n=2)");
    CHECK(sc.name == "inline");
    CHECK(sc.ring_expr == "valuation(rank=2)");
    REQUIRE(sc.checks.size() == 1);
    CHECK(sc.checks[0].kind == "example37");
    CHECK(sc.checks[0].n == 2);
}

TEST_CASE("inline form allows a leading check keyword") {
    auto sc = parse_scenario("QQ[x, y]; check grade (x, y); check dim ()");
    CHECK(sc.checks.size() == 2);
    CHECK(sc.checks[1].kind == "dim");
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_scenario("scenario t\nring QQ[x]\ncheck bogus (x)\n");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        CHECK(std::string(e.what()).find("bogus") != std::string::npos);
    }
}

TEST_CASE("duplicate options are rejected") {
    CHECK_THROWS_AS(parse_scenario("scenario t\nring QQ[x]\ncheck wpr (x) bound 2 bound 3\n"),
                    Error);
    CHECK_THROWS_AS(parse_scenario("scenario t\nring QQ[x]\nring QQ[y]\ncheck dim ()\n"),
                    Error);
}

TEST_CASE("scenario requires a name and a check") {
    CHECK_THROWS_AS(parse_scenario("scenario t\nring QQ[x]\n"), Error);
    CHECK_THROWS_AS(parse_scenario("scenario \nring QQ[x]\ncheck dim ()\n"), Error);
}

TEST_CASE("expectation pass and mismatch") {
    RunOptions opts;
    auto ok = run_scenario(parse_scenario("QQ[x, y]; check grade (x, y) expect 2"), opts);
    CHECK(ok.status == "pass");
    CHECK(ok.exit_code == 0);
    auto bad = run_scenario(parse_scenario("QQ[x, y]; check dim () expect 5"), opts);
    CHECK(bad.status == "mismatch");
    CHECK(bad.exit_code == 1);
    REQUIRE(bad.checks.size() == 1);
    CHECK(bad.checks[0].outcome == "2");
    CHECK(bad.checks[0].spec.expect == "5");
}

TEST_CASE("domain errors yield exit two") {
    RunOptions opts;
    auto r = run_scenario(parse_scenario("QQ[x]; check grade (q)"), opts);
    CHECK(r.status == "error");
    CHECK(r.exit_code == 2);
    CHECK(r.checks[0].status == "error");
}

TEST_CASE("expected violations still exit one") {
    const std::string* text = find_bundled("paper/bad_ring");
    REQUIRE(text != nullptr);
    RunOptions opts;
    auto r = run_scenario(parse_scenario(*text), opts);
    CHECK(r.status == "violation");
    CHECK(r.exit_code == 1);
    for (const auto& c : r.checks) CHECK(c.status != "mismatch");
}

TEST_CASE("json emission is deterministic across jobs") {
    const std::string* text = find_bundled("paper/example_3_7");
    REQUIRE(text != nullptr);
    auto sc = parse_scenario(*text);
    RunOptions s1;
    s1.jobs = 1;
    RunOptions s4;
    s4.jobs = 4;
    auto a = emit_json(run_scenario(sc, s1));
    auto c = emit_json(run_scenario(sc, s4));
    CHECK(a == c);
    CHECK(a.back() == '\n');
}

TEST_CASE("json shape carries the check table") {
    RunOptions opts;
    auto r = run_scenario(parse_scenario("QQ[x, y]; check height (x) expect 1"), opts);
    auto j = nlohmann::json::parse(emit_json(r));
    CHECK(j["scenario"] == "inline");
    CHECK(j["ring"] == "QQ[x, y]");
    CHECK(j["status"] == "pass");
    CHECK(j["exit_code"] == 0);
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["kind"] == "height");
    CHECK(j["checks"][0]["outcome"] == "1");
    CHECK(j["checks"][0]["expect"] == "1");
    CHECK(j["checks"][0]["budget_steps"].is_number());
    CHECK(j["checks"][0]["data"].is_object());
}

TEST_CASE("text emission shows verdict lines") {
    RunOptions opts;
    auto r = run_scenario(parse_scenario("QQ[x, y]; check regular (x, y)"), opts);
    auto text = emit_text(r);
    CHECK(text.find("[pass]") != std::string::npos);
    CHECK(text.find("-> true") != std::string::npos);
    CHECK(text.find("result: pass (exit 0)") != std::string::npos);
}

TEST_CASE("per check ring override") {
    RunOptions opts;
    auto sc = parse_scenario(
        "scenario t\nring QQ[x, y]\ncheck dim ()\ncheck dim () in QQ[x, y, z]/(x*z) expect 2\n");
    auto r = run_scenario(sc, opts);
    CHECK(r.status == "pass");
    CHECK(r.checks[0].outcome == "2");
    CHECK(r.checks[1].outcome == "2");
}

TEST_CASE("comments and blank lines are ignored") {
    auto sc = parse_scenario("# header\nscenario t\n\nring QQ[x] # trailing\ncheck dim ()\n");
    CHECK(sc.name == "t");
    CHECK(sc.ring_expr == "QQ[x]");
}

TEST_CASE("budget line flows into the run") {
    auto sc = parse_scenario("scenario t\nring QQ[x, y]\nbudget 2\ncheck grade (x, y)\n");
    CHECK(sc.budget == 2);
    RunOptions opts;
    auto r = run_scenario(sc, opts);
    CHECK(r.status == "error");
    CHECK(r.exit_code == 2);
    CHECK(r.checks[0].outcome == "error");
    CHECK(r.checks[0].data["class"] == "budget");
    RunOptions roomy;
    roomy.budget = 1000; // option overrides the scenario line
    auto r2 = run_scenario(sc, roomy);
    CHECK(r2.status == "pass");
    CHECK(r2.checks[0].outcome == "2");
}

TEST_CASE("pool and from blocks round trip") {
    auto text = "scenario t\nring QQ[x, y]\ncheck cm () maxlen 2 pool { x; y; x + y }\n"
                "check hochster (x, y) from { (x); (x, y) }\n";
    auto sc = parse_scenario(text);
    REQUIRE(sc.checks.size() == 2);
    CHECK(sc.checks[0].pool == "x; y; x + y");
    CHECK(sc.checks[1].from == "(x); (x, y)");
    auto again = parse_scenario(sc.str());
    CHECK(again.str() == sc.str());
}

} // suite
