#include <doctest.h>

#include <cstdlib>

#include <json.hpp>

#include <qgrass/cli.hpp>

using qgrass::run;
using Json = nlohmann::json;

TEST_CASE("product command")
{
    const auto r = run({"product", "--r", "2", "--n", "4", "--mu", "1", "--nu", "1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "σ[2] + σ[1,1]\n");

    const auto q = run({"product", "--r", "2", "--n", "4", "--mu", "2", "--nu", "1,1", "--format", "json"});
    CHECK(q.exit_code == 0);
    const auto doc = Json::parse(q.out);
    CHECK(doc["product"].size() == 1);
    CHECK(doc["product"][0]["q"] == 1);
    CHECK(doc["product"][0]["coeff"] == "1/1");
}

TEST_CASE("gw command")
{
    const auto vi = run({"gw", "--r", "2", "--n", "4", "--mu", "2", "--nu", "1,1", "--rho", "2,2", "--d", "1",
                         "--method", "vi", "--format", "json"});
    CHECK(vi.exit_code == 0);
    const auto doc = Json::parse(vi.out);
    CHECK(doc["value"] == "1");
    CHECK(doc["method"] == "vi");
    CHECK(doc["rho"] == Json({2, 2}));

    const auto rim = run({"gw", "--r", "2", "--n", "4", "--mu", "2", "--nu", "1,1", "--rho", "2,2", "--d", "1"});
    CHECK(rim.exit_code == 0);
    CHECK(rim.out.find("= 1  (rimhook)") != std::string::npos);
}

TEST_CASE("jfun command")
{
    const auto closed = run({"jfun", "--r", "2", "--n", "4", "--d", "1", "--format", "json"});
    const auto local = run({"jfun", "--r", "2", "--n", "4", "--d", "1", "--format", "json", "--method", "localization"});
    CHECK(closed.exit_code == 0);
    CHECK(closed.out == local.out);
    CHECK(Json::parse(closed.out)["components"].size() == 4);

    const auto low = run({"jfun", "--r", "2", "--n", "4", "--d", "1", "--truncation", "2"});
    CHECK(low.exit_code == 0);
    CHECK(low.err.find("warning") != std::string::npos);
}

TEST_CASE("verify command")
{
    const auto r = run({"verify", "prop35", "--nmax", "3", "--dmax", "1", "--format", "json"});
    CHECK(r.exit_code == 0);
    const auto doc = Json::parse(r.out);
    CHECK(doc["suite"] == "prop35");
    CHECK(doc["status"] == "pass");
    REQUIRE(doc["items"].size() == 2);
    CHECK(doc["items"][0]["inputs"] == Json({{"n", 3}, {"d", 0}}));
    CHECK(doc["items"][1]["inputs"] == Json({{"n", 3}, {"d", 1}}));
    CHECK(Json::parse(doc.dump()) == doc);

    const auto hv = run({"verify", "hori-vafa", "--r", "2", "--n", "4", "--dmax", "2"});
    CHECK(hv.exit_code == 0);
    CHECK(hv.out.rfind("suite hori-vafa: pass (3/3 passed)", 0) == 0);

    CHECK(run({"verify", "martin", "--r", "2", "--n", "4"}).exit_code == 0);
}

TEST_CASE("deterministic output")
{
    const std::vector<std::string> args{"verify", "bailey", "--nmax", "4", "--dmax", "2"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("argument errors")
{
    const auto bad = run({"product", "--r", "2", "--n", "4", "--mu", "1,x", "--nu", "1"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("--mu") != std::string::npos);

    CHECK(run({"product", "--r", "2", "--n", "4", "--mu", "3", "--nu", "1"}).exit_code == 2);
    CHECK(run({"product", "--r", "4", "--n", "4", "--mu", "1", "--nu", "1"}).exit_code == 2);
    CHECK(run({"gw", "--r", "2", "--n", "4", "--mu", "1", "--nu", "1", "--rho", "1", "--d", "-1"}).exit_code == 2);
    CHECK(run({"verify", "nonsense"}).exit_code == 2);
    CHECK(run({"verify", "martin", "--r", "2"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("parallel sweeps keep report order")
{
    const std::vector<std::string> args{"verify", "thm25", "--format", "json"};
    ::setenv("QGRASS_THREADS", "1", 1);
    const auto serial = run(args);
    ::setenv("QGRASS_THREADS", "4", 1);
    const auto parallel = run(args);
    ::unsetenv("QGRASS_THREADS");
    CHECK(serial.exit_code == 0);
    CHECK(serial.out == parallel.out);
}
