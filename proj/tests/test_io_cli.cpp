#include "test_util.h"

#include "kmodem/errors.h"
#include "kmodem/generators.h"
#include "kmodem/io.h"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

using namespace kmodem;

TEST_CASE("polygon json round trip is identity") {
    Polygon p = gen_random_monotone(15, 3);
    std::string once = write_polygon_json(p);
    std::string twice = write_polygon_json(read_polygon_json(once));
    CHECK(once == twice);

    Polygon q = gen_random_ortho_monotone(12, 3);
    CHECK(write_polygon_json(q) == write_polygon_json(read_polygon_json(write_polygon_json(q))));
}

TEST_CASE("polygon json normalizes orientation to CCW") {
    std::string cw = R"({"class":"monotone","vertices":[["0","0"],["1","2"],["2","0"]]})";
    Polygon p = read_polygon_json(cw);
    CHECK(sgn(p.area_2()) > 0);
}

TEST_CASE("rational coordinates survive the round trip") {
    std::string text = R"({"class":"monotone","vertices":[["0","0"],["7/3","-1/2"],["5","0"],["2","3/7"]]})";
    Polygon p = read_polygon_json(text);
    std::string out = write_polygon_json(p);
    CHECK(out.find("7/3") != std::string::npos);
    CHECK(out.find("3/7") != std::string::npos);
}

TEST_CASE("plan json round trip") {
    ModemPlan plan{2, {Modem{tu::Pr("1/2", "3"), 2, "n1"}, Modem{tu::Pr("5", "-2/7"), 2, "n2"}}};
    ModemPlan back = read_plan_json(write_plan_json(plan));
    CHECK(back.k == 2);
    REQUIRE(back.modems.size() == 2);
    CHECK(back.modems[0].position == plan.modems[0].position);
    CHECK(back.modems[1].position == plan.modems[1].position);
    CHECK(back.modems[1].note == "n2");
    CHECK_THROWS_AS(read_plan_json("{not json"), Error);
}

TEST_CASE("witness sidecar round trip") {
    InstanceFamily fam = gen_monotone_spikes(1, 2);
    FamilySidecar sc = read_witnesses_json(write_witnesses_json(fam));
    CHECK(sc.family == "spikes");
    CHECK(sc.k == 1);
    CHECK(sc.t == 2);
    CHECK(sc.witnesses.size() == fam.witnesses.size());
    CHECK(sc.witnesses[0] == fam.witnesses[0]);
}

TEST_CASE("svg rendering") {
    InstanceFamily fam = gen_monotone_spikes(0, 2);
    std::string svg = render_svg(fam.polygon, {Modem{fam.witnesses[0], 0, "m"}}, fam.witnesses);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("<rect") != std::string::npos);
}

#ifdef KMODEM_CLI_PATH

namespace {

int run_cli(const std::string& args) {
    std::string cmd = std::string(KMODEM_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string tmpdir() {
    static std::string dir = [] {
        char tmpl[] = "/tmp/kmodem_cli_XXXXXX";
        return std::string(mkdtemp(tmpl));
    }();
    return dir;
}

} // namespace

TEST_CASE("cli: generate, place, verify round trip") {
    std::string d = tmpdir();
    CHECK(run_cli("generate --family spikes --k 2 --t 3 -o " + d + "/spikes.json") == 0);
    Polygon p = read_polygon_json(slurp_file(d + "/spikes.json"));
    CHECK(p.size() == 17);
    FamilySidecar sc = read_witnesses_json(slurp_file(d + "/spikes.json.witnesses.json"));
    CHECK(sc.t == 3);

    CHECK(run_cli("place -i " + d + "/spikes.json --k 2 -o " + d + "/plan.json") == 0);
    CHECK(run_cli("verify -i " + d + "/spikes.json -p " + d + "/plan.json -o " + d + "/cert.json") == 0);
    CHECK(slurp_file(d + "/cert.json").find("covered") != std::string::npos);

    // an underpowered plan is rejected with exit code 1
    ModemPlan weak{2, {Modem{sc.witnesses[0], 2, ""}}};
    spew_file(d + "/weak.json", write_plan_json(weak));
    CHECK(run_cli("verify -i " + d + "/spikes.json -p " + d + "/weak.json") == 1);
}

TEST_CASE("cli: random generation and check-position") {
    std::string d = tmpdir();
    CHECK(run_cli("generate --random-monotone --n 9 --seed 1 -o " + d + "/rnd.json") == 0);
    Polygon p = read_polygon_json(slurp_file(d + "/rnd.json"));
    CHECK(p.size() == 9);
    // v_{k+2} of a (2k+3)-gon is valid (k = 3)
    Point v = p.labeled(5);
    CHECK(run_cli("check-position -i " + d + "/rnd.json --x " + scalar_str(v.x) + " --y " + scalar_str(v.y) +
                  " --k 3") == 0);
}

TEST_CASE("cli: usage and convention errors") {
    std::string d = tmpdir();
    CHECK(run_cli("generate --family bogus -o " + d + "/x.json") == 2);
    CHECK(run_cli("place -i /nonexistent.json --k 1") == 2);
    // self-crossing polygon: convention violation maps to exit 3
    spew_file(d + "/bad.json", R"({"class":"monotone","vertices":[["0","0"],["2","2"],["2","0"],["0","2"]]})");
    CHECK(run_cli("place -i " + d + "/bad.json --k 1") == 3);
}

TEST_CASE("cli: render and bench smoke") {
    std::string d = tmpdir();
    CHECK(run_cli("generate --family corridors --k 2 --t 2 -o " + d + "/c.json") == 0);
    CHECK(run_cli("render -i " + d + "/c.json -w " + d + "/c.json.witnesses.json -o " + d + "/c.svg") == 0);
    CHECK(slurp_file(d + "/c.svg").rfind("<svg", 0) == 0);
    CHECK(run_cli("bench --family spikes --k 0 --t 2..3") == 0);
}

#endif
