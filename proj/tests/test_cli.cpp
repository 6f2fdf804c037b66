#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct run_result {
    int code;
    std::string out;
};

run_result run(std::string const& args)
{
    std::string cmd = std::string(PTC_EXE) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("construct")
{
    auto r = run("construct --family F1_a2c2 --alpha 2");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["param"]["alpha"] == "2");
    CHECK(j["points"]["P"]["y"] == "73/64");

    auto f = run("construct --family F6_frey_ac --triple 3,4,5");
    CHECK(f.code == 0);
    CHECK(nlohmann::json::parse(f.out)["curve"]["a2"] == "16");

    CHECK(run("construct --family F1_a2c2 --alpha 1").code == 2);
    CHECK(run("construct --family F1_a2c2").code == 2);
    CHECK(run("construct --family F9 --t 2").code == 2);
    CHECK(run("construct --family F5_b2c2 --t=-49/10").code == 0);
    CHECK(run("construct --family F5_b2c2 --t 0.25").code == 0);
}

TEST_CASE("certify")
{
    auto r = run("certify --family F7_frey_bc --triple 3,4,5");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["verdict"] == "infinite");
    CHECK(run("certify --family F1_a2c2 --triple 6,8,10").code == 2);
    CHECK(run("certify --family F1_a2c2 --triple 3,4,6").code == 2);

    auto all = run("certify --family F1_a2c2 --all-ppt-up-to 100");
    CHECK(all.code == 0);
    CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 16);
}

TEST_CASE("torsion height regulator")
{
    auto t = run("torsion --curve 0,0,1");
    CHECK(t.code == 0);
    CHECK(nlohmann::json::parse(t.out)["torsion"].size() == 6);

    auto h = run("--precision 30 height --family F2_a2b2 --T 1 --points P1");
    CHECK(h.code == 0);

    auto g = run("regulator --family F1_a2c2 --alpha 2 --points P,Q,R");
    CHECK(g.code == 0);
    auto j = nlohmann::json::parse(g.out);
    CHECK(j["rank_lower_bound"] == 3);
    CHECK(j["epsilon"] == "1e-4");
    CHECK(j["det"].get<std::string>().rfind("73.358359773386", 0) == 0);

    CHECK(run("regulator --curve 0,-225,64 --point 0,9").code == 2);
}

TEST_CASE("reproduce")
{
    auto r = run("reproduce");
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["rows"].size() == 9);
    auto c1 = run("reproduce --format csv");
    auto c2 = run("reproduce --format csv");
    CHECK(c1.code == 0);
    CHECK(c1.out == c2.out);
    CHECK(run("reproduce --precision 30").code == 0);
    CHECK(run("reproduce --format xml").code == 2);
}

TEST_CASE("sweep")
{
    auto a = run("sweep --family F1_a2c2 --alpha 2..12 --step 1 --precision 30");
    CHECK(a.code == 0);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["records"].size() == 11);
    CHECK(j["records"][0]["rank_lower_bound"] == 3);

    auto one = run("--jobs 1 sweep --family F2_a2b2 --T 1..5 --precision 30");
    auto three = run("--jobs 3 sweep --family F2_a2b2 --T 1..5 --precision 30");
    CHECK(one.code == 0);
    CHECK(one.out == three.out);

    CHECK(run("sweep --family F1_a2c2 --alpha 1..1").code == 2);
    CHECK(run("sweep --family F1_a2c2 --alpha 3..2").code == 2);
    CHECK(run("sweep --family F1_a2c2 --alpha 2..3 --step 0").code == 2);
}
