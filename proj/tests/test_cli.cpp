#include <catch2/catch_amalgamated.hpp>
#include <gsing/cli.hpp>

using namespace gsing;
using cli::RunResult;
using Json = nlohmann::json;

namespace {

Json parse_out(const RunResult& r) {
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.err.empty());
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("invariants command", "[cli]") {
    Json doc = parse_out(cli::run({"invariants", "--type", "Dk", "--k", "6"}));
    REQUIRE(doc["schema"] == "gamma-sing/1");
    REQUIRE(doc["command"] == "invariants");
    REQUIRE(doc["spec"]["name"] == "D6");
    REQUIRE(doc["result"]["mu"] == 6);
    REQUIRE(doc["result"]["tau"] == 6);
    REQUIRE(doc["result"]["tau_es"] == 6);
    REQUIRE(doc["result"]["kappa"] == 8);
    REQUIRE(doc["result"]["delta"] == 4);
    REQUIRE(doc["result"]["branches"]["count"] == 3);
    REQUIRE(doc["result"]["branches"]["exact"] == true);

    Json sq = parse_out(cli::run({"invariants", "--type", "sqh", "--poly", "x^7 - y^5",
                                  "--weights", "5,7"}));
    REQUIRE(sq["spec"]["name"] == "sqh(5,7)");
    REQUIRE(sq["result"]["mu"] == 24);
    REQUIRE(sq["result"]["kappa"] == 28);
}

TEST_CASE("hilbert command", "[cli]") {
    Json doc = parse_out(cli::run({"hilbert", "--ideal", "x^3, x^2*y, y^3"}));
    REQUIRE(doc["result"]["h0"] == Json::array({1, 2, 3, 1}));
    REQUIRE(doc["result"]["h1"] == Json::array({1, 3, 6, 7}));
    REQUIRE(doc["result"]["colength"] == 7);
    REQUIRE(doc["result"]["mult"] == 3);
    REQUIRE(doc["result"]["degbound"] == 4);
    REQUIRE(doc["result"]["min_generators"] == 3);
    REQUIRE(doc["result"]["staircase"] == Json::array({"y^3", "x^2*y", "x^3"}));

    // Same staircase regardless of the attached ordering.
    Json ls = parse_out(cli::run({"hilbert", "--ideal", "x^3, x^2*y, y^3", "--order", "ls"}));
    REQUIRE(ls["result"]["colength"] == 7);
    REQUIRE(ls["result"]["h0"] == doc["result"]["h0"]);
    Json w = parse_out(cli::run({"hilbert", "--ideal", "x^3, x^2*y, y^3", "--order", "w:2,3"}));
    REQUIRE(w["result"]["colength"] == 7);

    // Spec-driven form with the base ideal family switch.
    Json ea = parse_out(cli::run({"hilbert", "--type", "Mk", "--k", "4", "--family", "ea"}));
    REQUIRE(ea["result"]["colength"] == 9);
    Json es = parse_out(cli::run({"hilbert", "--type", "Mk", "--k", "4", "--family", "es"}));
    REQUIRE(es["result"]["colength"] == 8);
}

TEST_CASE("gamma-search command", "[cli]") {
    Json doc = parse_out(
        cli::run({"gamma-search", "--type", "Mk", "--k", "4", "--alpha", "1/2"}));
    REQUIRE(doc["result"]["alpha"] == "1/2");
    REQUIRE(doc["result"]["gamma"] == "49/2");
    REQUIRE(doc["result"]["status"] == "matches-closed-form");
    REQUIRE(doc["result"]["closed_form"]["exact"] == "49/2");
    REQUIRE(doc["result"]["witness"]["ideal"] == Json::array({"y^3", "x^2"}));
    REQUIRE(doc["result"]["witness"]["colength"] == 6);

    // Integral rationals are emitted as plain JSON numbers.
    Json a3 = parse_out(cli::run({"gamma-search", "--type", "Ak", "--k", "3", "--alpha", "1"}));
    REQUIRE(a3["result"]["gamma"] == 16);

    // The deterministic candidate portion certifies the table values even
    // with the random budget off.
    Json frozen = parse_out(
        cli::run({"gamma-search", "--type", "Ak", "--k", "2", "--alpha", "1/2", "--budget", "0"}));
    REQUIRE(frozen["result"]["status"] == "matches-closed-form");
}

TEST_CASE("gamma-ideal command", "[cli]") {
    Json doc = parse_out(cli::run({"gamma-ideal", "--poly", "x^2*y - y^9", "--ideal", "x, y^8",
                                   "--alpha", "0"}));
    REQUIRE(doc["result"]["gamma"] == 64);
    REQUIRE(doc["result"]["status"] == "lower-bound-only");
    REQUIRE(doc["result"]["closed_form"].is_null());
    REQUIRE(doc["result"]["witness"]["colength"] == 8);
    REQUIRE(doc["result"]["witness"]["i"] == 9);
    REQUIRE(doc["result"]["witness"]["lambda"] == 64);
}

TEST_CASE("tau-ci command", "[cli]") {
    Json doc = parse_out(cli::run({"tau-ci", "--type", "Mk", "--k", "5"}));
    REQUIRE(doc["result"]["tau_ci"] == 9);
    REQUIRE(doc["result"]["closed_form"] == 9);
    REQUIRE(doc["result"]["status"] == "matches-closed-form");

    // Without a registered closed form the result is a certified lower bound.
    Json open = parse_out(cli::run({"tau-ci", "--type", "Mk", "--k", "4", "--family", "ea"}));
    REQUIRE(open["result"]["closed_form"].is_null());
    REQUIRE(open["result"]["status"] == "lower-bound-only");
}

TEST_CASE("output is deterministic", "[cli]") {
    std::vector<std::string> args{"gamma-search", "--type", "Dk", "--k", "5",
                                  "--alpha", "1/3", "--seed", "7"};
    RunResult r1 = cli::run(args);
    RunResult r2 = cli::run(args);
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r1.out == r2.out);
}

TEST_CASE("table format", "[cli]") {
    RunResult r = cli::run({"invariants", "--type", "Ak", "--k", "2", "--format", "table"});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.out.find("result.tau  2") != std::string::npos);
    REQUIRE(r.out.find("result.kappa  3") != std::string::npos);
    REQUIRE(r.out.find("schema  gamma-sing/1") != std::string::npos);
    REQUIRE(r.out.find('{') == std::string::npos);
}

TEST_CASE("help and usage errors exit cleanly", "[cli]") {
    RunResult help = cli::run({"--help"});
    REQUIRE(help.exit_code == 0);
    REQUIRE(help.out.find("gamma-search") != std::string::npos);

    // Unknown subcommand, unknown flag values, out-of-range arguments.
    REQUIRE(cli::run({}).exit_code == 2);
    REQUIRE(cli::run({"frobnicate"}).exit_code == 2);
    REQUIRE(cli::run({"invariants", "--type", "Zk", "--k", "3"}).exit_code == 2);
    REQUIRE(cli::run({"invariants", "--type", "Ak"}).exit_code == 2);
    REQUIRE(cli::run({"invariants", "--type", "Ak", "--k", "0"}).exit_code == 2);
    REQUIRE(cli::run({"gamma-search", "--type", "Ak", "--k", "3", "--alpha", "2"}).exit_code == 2);
    REQUIRE(cli::run({"gamma-search", "--type", "Ak", "--k", "3", "--alpha", "nope"}).exit_code ==
            2);
    REQUIRE(cli::run({"invariants", "--type", "sqh", "--poly", "x^2 - y^3"}).exit_code == 2);
    REQUIRE(cli::run({"hilbert"}).exit_code == 2);
    REQUIRE(cli::run({"hilbert", "--ideal", "x", "--type", "Ak", "--k", "2"}).exit_code == 2);
    REQUIRE(cli::run({"hilbert", "--ideal", "x^2,y^3", "--order", "zz"}).exit_code == 2);
    REQUIRE(cli::run({"gamma-ideal", "--ideal", "x,y"}).exit_code == 2);  // --poly required
    REQUIRE(cli::run({"hilbert", "--ideal", "x^2 + + y"}).exit_code == 2);

    // Well-formed requests that fail mathematically exit 1.
    REQUIRE(cli::run({"hilbert", "--ideal", "x"}).exit_code == 1);
    REQUIRE(cli::run({"hilbert", "--ideal", "x^6, y^6", "--max-degree", "3"}).exit_code == 1);

    RunResult bad = cli::run({"hilbert", "--ideal", "x"});
    REQUIRE(bad.out.empty());
    REQUIRE_FALSE(bad.err.empty());
}
