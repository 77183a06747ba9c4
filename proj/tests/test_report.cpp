#include "pfh/report.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pfh/cylinder.hpp"
#include "pfh/rational.hpp"
#include "pfh/svg.hpp"

using namespace pfh;

namespace {

Report sample_report() {
    Window w{Bound(Frac(0), 1), Bound(Frac(3), -1)};
    CylinderComplex c = cylinder_complex(w, 3, 2);
    std::vector<std::string> texts;
    for (const OrbitSet& g : c.gens) texts.push_back(g.str());
    Report r = make_report("cylinder x1=0+eps x2=3-eps P=3 Q=2");
    attach_complex(r, c.cx, texts);
    add_check(r, "homology", true, "one class in each of grades 0 and 1");
    return r;
}

}  // namespace

TEST_CASE("reports round trip through canonical json") {
    Report r = sample_report();
    CHECK(r.tool == "pfh");
    CHECK(r.version == kToolVersion);
    CHECK(r.generators.size() == 6);
    CHECK(r.differential.size() == 3);
    REQUIRE(r.betti.size() == 2);
    CHECK(r.betti[0].grade == 0);
    CHECK(r.betti[0].dim == 1);
    CHECK(r.betti[1].grade == 1);
    CHECK(r.betti[1].dim == 1);
    CHECK(all_checks_pass(r));

    std::string text = report_json(r);
    Report back = parse_report(text);
    CHECK(back == r);
    CHECK(report_json(back) == text);  // re-emission is byte identical

    add_check(r, "broken", false, "deliberate failure");
    CHECK_FALSE(all_checks_pass(r));

    CHECK_THROWS_AS(parse_report("no json here"), Error);
    CHECK_THROWS_AS(parse_report("{}"), Error);
}

TEST_CASE("empty complexes emit empty tables") {
    Report r = make_report("empty");
    ChainComplexF2 cx;
    attach_complex(r, cx, {});
    std::string text = report_json(r);
    CHECK(text.find("\"generators\": []") != std::string::npos);
    CHECK(text.find("\"betti\": []") != std::string::npos);
    CHECK(parse_report(text) == r);

    std::vector<std::string> too_many = {"a"};
    CHECK_THROWS_AS(attach_complex(r, cx, too_many), Error);
}

TEST_CASE("reports write to disk with path context on failure") {
    Report r = sample_report();
    std::string path = "/tmp/pfh_report_roundtrip.json";
    write_report(r, path);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(parse_report(buf.str()) == r);

    try {
        write_report(r, "/nonexistent_dir_pfh/x.json");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("/nonexistent_dir_pfh/x.json") !=
              std::string::npos);
    }
}

TEST_CASE("svg renders lattice paths at twenty units per step") {
    std::vector<ConvexPath> paths = {parse_orbit_set("e[1/2]").path()};
    std::string svg = render_svg(paths, {});
    CHECK(svg.find("<?xml") == 0);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("points=\"0,0 20,-40\"") != std::string::npos);

    std::string grid_only = render_svg({}, {});
    CHECK(grid_only.find("<svg") != std::string::npos);
    CHECK(grid_only.find("<polyline") == std::string::npos);
    CHECK(grid_only.find("<line") != std::string::npos);

    std::vector<SvgLabel> labels = {{"E", Vec2{1, 1}}, {"a<b", Vec2{0, 2}}};
    std::string labeled = render_svg({}, labels);
    CHECK(labeled.find(">E</text>") != std::string::npos);
    CHECK(labeled.find("a&lt;b") != std::string::npos);

    // two slope pieces, three corners
    std::vector<ConvexPath> two = {parse_orbit_set("e[2] h[1]").path()};
    std::string svg2 = render_svg(two, {});
    CHECK(svg2.find("points=\"0,0 40,-20 60,-40\"") != std::string::npos);
}
