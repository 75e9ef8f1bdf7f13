#include "doctest.h"

#include "avf/cli.hpp"

#include "json.hpp"

#include <sstream>

using json = nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
    json body;
};

CliResult cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = avf::cli::run(args, out, err);
    CliResult r{code, out.str(), err.str(), {}};
    if (!r.out.empty() && r.out[0] == '{') {
        try {
            r.body = json::parse(r.out);
        } catch (const json::parse_error&) {
            // JSON-lines output: callers inspect r.out directly
        }
    }
    return r;
}

} // namespace

TEST_CASE("cli structure: the worked center-case example")
{
    auto r = cli({"structure", "--q", "3", "--poly", "9,0,-6,0,1", "--order", "zpipibar", "--n", "2", "--mode",
                  "center"});
    CHECK(r.code == 0);
    CHECK(r.body["status"] == "ok");
    CHECK(r.body["invariants"] == json({2, 2, 2, 2}));
    CHECK(r.body["cardinality"] == 16);
    CHECK(r.body["crosscheck"] == 16);
    CHECK(r.body["d"] == 2);
    // schema-stable fields
    for (const char* key : {"status", "mode", "q", "poly", "order_basis", "n", "invariants", "cardinality",
                            "crosscheck", "certificates"})
        CHECK(r.body.contains(key));
}

TEST_CASE("cli validate: invalid input reports the reason and exits 2")
{
    auto r = cli({"validate", "--q", "2", "--poly", "2,3,1"});
    CHECK(r.code == 2);
    CHECK(r.body["status"] == "invalid");
    CHECK(r.body["reason"] == "RootModulusViolated");

    auto ok = cli({"validate", "--q", "2", "--poly", "2,0,1"});
    CHECK(ok.code == 0);
    CHECK(ok.body["status"] == "valid");
    CHECK(ok.body["g"] == 1);
    CHECK(ok.body["ordinary"] == false);
}

TEST_CASE("cli verify-ec: PASS with oracle [3]")
{
    auto r = cli({"verify-ec", "--p", "2", "--k", "1", "--curve", "0,0,1,0,0", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.body["status"] == "pass");
    CHECK(r.body["oracle_invariants"] == json({3}));
    CHECK(r.body["oracle_count"] == 3);
    CHECK(r.body["match_set"].size() == 1);
}

TEST_CASE("cli hypothesis failures exit 1, resource caps exit 3")
{
    // center mode on a non-coprime order
    auto r = cli({"structure", "--q", "3", "--poly", "3,0,1", "--order", "zpi", "--n", "1", "--mode", "center"});
    CHECK(r.code == 1);
    CHECK(r.body["status"] == "error");
    CHECK(r.body["category"] == "hypothesis_not_met");
    CHECK(r.body["reason"] == "NotCoprimeToConductor");

    // out-of-scope integral pi
    auto oots = cli({"verify-ec", "--p", "2", "--k", "2", "--curve", "0,0,1,0,0", "--n", "1"});
    CHECK(oots.code == 1);
    CHECK(oots.body["reason"] == "OutOfTheoremScope");

    // field cap
    auto cap = cli({"verify-ec", "--p", "2", "--k", "1", "--curve", "0,0,1,0,0", "--n", "20"});
    CHECK(cap.code == 3);
    CHECK(cap.body["category"] == "resource_cap");
    CHECK(cap.body["reason"] == "FieldTooLarge");
}

TEST_CASE("cli factor / gorenstein / conductor against module outputs")
{
    auto f = cli({"factor", "--q", "2", "--poly", "2,0,1", "--order", "zpi", "--s", "3"});
    CHECK(f.code == 0);
    REQUIRE(f.body["factors"].size() == 2);
    CHECK(f.body["factors"][0]["norm"] == 3);
    CHECK(f.body["factors"][0]["exponent"] == 1);

    auto g = cli({"gorenstein", "--m", "-2,0,0,1", "--order", "gens:1;0,2,0;0,0,2"});
    CHECK(g.code == 0);
    CHECK(g.body.contains("gorenstein"));

    auto c = cli({"conductor", "--m", "3,0,1", "--order", "zpi"});
    CHECK(c.code == 0);
    CHECK(c.body["norm"] == 2);
    CHECK(c.body["is_maximal"] == false);

    auto cmax = cli({"conductor", "--m", "2,0,1", "--order", "zpi"});
    CHECK(cmax.body["is_maximal"] == true);
}

TEST_CASE("cli torsion and tower")
{
    auto t = cli({"torsion", "--q", "2", "--poly", "2,0,1", "--order", "zpi", "--s", "3", "--mode", "gorenstein"});
    CHECK(t.code == 0);
    CHECK(t.body["invariants"] == json({3, 3}));

    auto sep = cli({"torsion", "--q", "2", "--poly", "2,0,1", "--order", "zpi", "--s", "2", "--mode", "gorenstein"});
    CHECK(sep.code == 1);
    CHECK(sep.body["reason"] == "SeparabilityUnknown");

    auto tw = cli({"tower", "--q", "2", "--poly", "2,0,1", "--order", "zpi", "--chain", "1,2,4", "--ells", "3",
                   "--depth", "2", "--mode", "auto"});
    CHECK(tw.code == 0);
    REQUIRE(tw.body["chain"].size() == 3);
    CHECK(tw.body["chain"][0]["invariants"] == json({3}));
    CHECK(tw.body["chain"][2]["invariants"] == json({3, 3}));
    CHECK(tw.body["growth"].size() == 2);
}

TEST_CASE("cli enumerate with and without campaign")
{
    auto e = cli({"enumerate", "--q", "2", "--g", "1"});
    CHECK(e.code == 0);
    CHECK(e.body["count"] == 5);

    // tiny campaign over F_2 with a small field cap: 32 curves, n <= 4
    auto camp = cli({"enumerate", "--q", "2", "--g", "1", "--verify-ec-all", "--cap-field", "16"});
    CHECK(camp.code == 0);
    // JSON-lines: every line parses and no line is a fail
    std::istringstream lines(camp.out);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        json j = json::parse(line);
        CHECK(j["status"] != "fail");
        ++rows;
    }
    CHECK(rows > 40); // 26 nonsingular curves x up to 4 extensions
}

TEST_CASE("cli output is byte-identical across runs and job counts")
{
    std::vector<std::string> args{"enumerate", "--q", "3", "--g", "1", "--verify-ec-all", "--cap-field", "27"};
    auto a = cli(args);
    auto b = cli(args);
    std::vector<std::string> args4 = args;
    args4.push_back("--jobs");
    args4.push_back("4");
    auto c = cli(args4);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.code == 0);
}

TEST_CASE("cli usage errors exit 2")
{
    std::ostringstream out, err;
    CHECK(avf::cli::run({"structure", "--q", "3"}, out, err) == 2);
    CHECK(avf::cli::run({"nonsense"}, out, err) == 2);
    CHECK(avf::cli::run({"validate", "--q", "notanumber", "--poly", "1"}, out, err) == 2);
}
