#include <random>

#include "doctest.h"
#include "pfh/cylinder.hpp"

using namespace pfh;

namespace {

OrbitSet os(const std::string& s) { return parse_orbit_set(s); }

Window win(const std::string& a, const std::string& b) {
    return {parse_bound(a), parse_bound(b)};
}

}  // namespace

TEST_CASE("orbit sets canonicalize") {
    OrbitSet g = os("e[0]^2 e[4/3] h[1] e[-1/5]");
    CHECK(g.str() == "e[4/3] h[1] e[0]^2 e[-1/5]");
    CHECK(g.total() == Vec2(4, 11));
    CHECK(g.unit_count() == 5);
    CHECK(g.elliptic_weight() == 4);
    CHECK(g.hyperbolic_count() == 1);
    CHECK(parse_orbit_set(g.str()) == g);
    CHECK(os("e[1/2] e[1/2]") == os("e[1/2]^2"));
    CHECK(os("1").factors.empty());

    CHECK_THROWS_AS(OrbitSet::of({{{2, 4}, OrbitType::Elliptic, 1}}), NonPrimitiveVector);
    CHECK_THROWS_AS(OrbitSet::of({{{1, 2}, OrbitType::Hyperbolic, 2}}), Error);
    CHECK_THROWS_AS(os("h[1/2] h[1/2]"), Error);
    CHECK_THROWS_AS(os("x[1]"), Error);
}

TEST_CASE("orbit set paths merge elliptic and hyperbolic copies") {
    OrbitSet g = os("e[1/2]^2 h[1/2] e[2]");
    auto path = g.path();
    REQUIRE(path.edges.size() == 2);
    CHECK(path.edges[0] == PathEdge(Vec2(2, 1), 1));
    CHECK(path.edges[1] == PathEdge(Vec2(1, 2), 3));
}

TEST_CASE("relative index") {
    CHECK(relative_index(os("h[3/2]"), os("e[2] e[1]")) == 3);
    CHECK(relative_index(os("e[3/2]"), os("e[2] e[1]")) == 2);
    CHECK(relative_index(os("h[3/2]"), os("e[3/2]")) == 1);
    CHECK(relative_index(os("e[2/3]"), os("h[1] e[1/2]")) == 1);
    CHECK(relative_index(os("e[2/3]"), os("e[1] e[1/2]")) == 2);
    CHECK(relative_index(os("e[2] e[1]"), os("e[2] e[1]")) == 0);
    CHECK(relative_index(os("e[0]^3"), os("h[1] h[0] h[-1]")) == 1);
    CHECK_THROWS_AS(relative_index(os("e[1]"), os("e[2]")), TotalMismatch);
}

TEST_CASE("index parity matches hyperbolic counts") {
    auto gens = enumerate_generators(win("0+eps", "2-eps"), 2, 4);
    REQUIRE(gens.size() > 4);
    for (const auto& a : gens)
        for (const auto& b : gens) {
            long long i = relative_index(a, b);
            CHECK((i - a.hyperbolic_count() - b.hyperbolic_count()) % 2 == 0);
        }
}

TEST_CASE("area term agrees with the determinant route") {
    auto gens = enumerate_generators(win("-1/4-eps", "3/2+eps"), 2, 3);
    REQUIRE(!gens.empty());
    for (const auto& a : gens)
        for (const auto& b : gens) {
            long long t = area_determinant_identity(a, b);
            CHECK(t == relative_index(a, b) - b.elliptic_weight() + a.elliptic_weight());
        }
}

TEST_CASE("area between non-touching paths matches the interior point count") {
    auto gens = enumerate_generators(win("-2-eps", "2+eps"), 0, 3);
    for (const auto& a : gens)
        for (const auto& b : gens) {
            auto pa = a.path(), pb = b.path();
            bool strict = true;
            for (long long q = 1; q < pa.height(); ++q)
                if (!(pa.p_at(q) < pb.p_at(q))) strict = false;
            if (!strict) continue;
            long long twice_area = ((area_pdq(pb) - area_pdq(pa)) * Frac(2)).p;
            long long interiors = (long long)lattice_points_strictly_between(pa, pb).size();
            long long on_a = (long long)lattice_points_on(pa).size();
            long long on_b = (long long)lattice_points_on(pb).size();
            CHECK(twice_area == 2 * interiors + on_a + on_b - 4);
        }
}

TEST_CASE("corner rounding detection") {
    CHECK(is_rounding(os("e[3/2]"), os("e[2] h[1]")));
    CHECK(is_rounding(os("e[3/2]"), os("h[2] e[1]")));
    CHECK(is_rounding(os("h[3/2]"), os("h[2] h[1]")));
    CHECK_FALSE(is_rounding(os("h[3/2]"), os("e[2] h[1]")));
    CHECK_FALSE(is_rounding(os("e[3/2]"), os("e[2] e[1]")));
    CHECK_FALSE(is_rounding(os("e[2] e[1]"), os("e[3/2]")));
    CHECK(is_rounding(os("e[2/3]"), os("h[1] e[1/2]")));
    CHECK(is_rounding(os("e[1/2]^2"), os("e[1] h[1/3]")));
    CHECK(is_rounding(os("e[1/2]^2"), os("h[1] e[1/3]")));
    CHECK_FALSE(is_rounding(os("e[1/2]^2"), os("e[1] e[1/3]")));
    CHECK_FALSE(is_rounding(os("e[1/2]^2"), os("h[1] e[0] e[1/2]")));
    CHECK(is_rounding(os("e[2/3] e[2]"), os("h[1] e[1/2] e[2]")));
    auto ws = rounding_witnesses(os("e[2/3] e[2]"), os("h[1] e[1/2] e[2]"));
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].corner == os("h[1] e[1/2]"));
    CHECK(ws[0].fill == os("e[2/3]"));
    CHECK_THROWS_AS(is_rounding(os("e[1]"), os("e[2]")), TotalMismatch);
}

TEST_CASE("triple-hyperbolic corners are recognized and carry no coefficient") {
    CHECK(is_double_rounding(os("e[0]^3"), os("h[1] h[0] h[-1]")));
    CHECK_FALSE(is_rounding(os("e[0]^3"), os("h[1] h[0] h[-1]")));
    CHECK_FALSE(is_double_rounding(os("e[0]^3"), os("h[1] e[0] h[-1]")));
    CHECK(relative_index(os("e[0]^3"), os("h[1] h[0] h[-1]")) == 1);

    auto c = cylinder_complex(win("-2-eps", "2+eps"), 0, 3);
    int from = c.gen_index(os("e[0]^3"));
    int to = c.gen_index(os("h[1] h[0] h[-1]"));
    REQUIRE(from >= 0);
    REQUIRE(to >= 0);
    CHECK_FALSE(std::binary_search(c.cx.d[from].begin(), c.cx.d[from].end(), to));
}

TEST_CASE("generator enumeration") {
    auto g32 = enumerate_generators(win("0+eps", "3-eps"), 3, 2);
    REQUIRE(g32.size() == 6);
    std::sort(g32.begin(), g32.end());
    for (const char* s : {"e[2] e[1]", "e[2] h[1]", "h[2] e[1]", "h[2] h[1]", "e[3/2]", "h[3/2]"}) {
        CAPTURE(s);
        CHECK(std::binary_search(g32.begin(), g32.end(), os(s)));
    }

    auto g14 = enumerate_generators(win("0+eps", "1-eps"), 1, 4);
    REQUIRE(g14.size() == 2);

    CHECK(enumerate_generators(win("0+eps", "1-eps"), 2, 1).empty());

    auto g23 = enumerate_generators(win("0+eps", "2-eps"), 2, 3);
    CHECK(g23.size() == 6);

    CHECK(e_generator(win("0+eps", "3-eps"), 3, 2) == os("e[2] e[1]"));
    auto hv = h_variants(os("e[2] e[1]"));
    REQUIRE(hv.size() == 2);
    CHECK(hv[0] == os("h[2] e[1]"));
    CHECK(hv[1] == os("e[2] h[1]"));
    auto hv2 = h_variants(os("e[0]^2"));
    REQUIRE(hv2.size() == 1);
    CHECK(hv2[0] == os("e[0] h[0]"));
}

TEST_CASE("differential of the width-two twist region") {
    auto c = cylinder_complex(win("0+eps", "3-eps"), 3, 2);
    REQUIRE(c.gens.size() == 6);
    CHECK(c.audit.empty());
    c.cx.assert_d_squared_zero();

    auto grade_of = [&](const std::string& s) { return c.cx.grade[c.gen_index(os(s))]; };
    CHECK(grade_of("e[2] e[1]") == 0);
    CHECK(grade_of("e[2] h[1]") == 1);
    CHECK(grade_of("h[2] e[1]") == 1);
    CHECK(grade_of("h[2] h[1]") == 2);
    CHECK(grade_of("e[3/2]") == 2);
    CHECK(grade_of("h[3/2]") == 3);

    auto targets = [&](const std::string& s) {
        std::vector<std::string> out;
        for (int t : c.cx.d[c.gen_index(os(s))]) out.push_back(c.gens[t].str());
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(targets("e[3/2]") == std::vector<std::string>{"e[2] h[1]", "h[2] e[1]"});
    CHECK(targets("h[3/2]") == std::vector<std::string>{"h[2] h[1]"});
    CHECK(targets("h[2] h[1]").empty());
    CHECK(targets("e[2] h[1]").empty());
    CHECK(targets("e[2] e[1]").empty());

    auto hc = check_cylinder_homology(c);
    CHECK(hc.ok);
    CHECK(hc.dims == std::map<long long, long long>{{0, 1}, {1, 1}});
}

TEST_CASE("roundings always drop the index by one") {
    for (auto [w, P, Q] : {std::tuple(win("0+eps", "2-eps"), 2LL, 3LL),
                           std::tuple(win("0+eps", "2-eps"), 2LL, 4LL),
                           std::tuple(win("-2-eps", "2+eps"), 0LL, 3LL)}) {
        auto gens = enumerate_generators(w, P, Q);
        for (const auto& a : gens)
            for (const auto& b : gens)
                if (is_rounding(a, b)) CHECK(relative_index(a, b) == 1);
    }
}

TEST_CASE("homology across windows") {
    for (auto [w, P, Q] : {std::tuple(win("0+eps", "3-eps"), 3LL, 2LL),
                           std::tuple(win("0+eps", "2-eps"), 2LL, 3LL),
                           std::tuple(win("0+eps", "2-eps"), 2LL, 4LL),
                           std::tuple(win("0+eps", "2-eps"), 4LL, 4LL),
                           std::tuple(win("0+eps", "1-eps"), 1LL, 4LL),
                           std::tuple(win("-2-eps", "2+eps"), 0LL, 3LL),
                           std::tuple(win("-1/4-eps", "3/2+eps"), 2LL, 3LL)}) {
        auto c = cylinder_complex(w, P, Q);
        CAPTURE(c.P);
        CAPTURE(c.Q);
        CHECK(c.audit.empty());
        auto hc = check_cylinder_homology(c);
        CHECK(hc.ok);
    }
}

TEST_CASE("filtration by the steepest maximal slope") {
    auto c32 = cylinder_complex(win("0+eps", "3-eps"), 3, 2);
    auto pages32 = top_slope_pages(c32, 3);
    PageDims e1 = {{{0, 2}, 1}, {{0, 3}, 1}, {{-1, 0}, 1}, {{-1, 1}, 2}, {{-1, 2}, 1}};
    PageDims e2 = {{{-1, 0}, 1}, {{-1, 1}, 1}};
    CHECK(pages32[0] == e1);
    CHECK(pages32[1] == e2);
    CHECK(pages32[2] == e2);

    auto c23 = cylinder_complex(win("0+eps", "2-eps"), 2, 3);
    auto pages23 = top_slope_pages(c23, 3);
    CHECK(pages23[0] == e1);
    CHECK(pages23[1] == e2);
    CHECK(pages23[2] == e2);
}

TEST_CASE("unimodular equivariance of the whole complex") {
    Mat2 shear{1, 1, 0, 1};
    Mat2 unshear{1, -1, 0, 1};
    CHECK(shear_equivariance_check(win("0+eps", "3-eps"), 3, 2, shear));
    CHECK(shear_equivariance_check(win("0+eps", "2-eps"), 2, 3, shear));
    CHECK(shear_equivariance_check(win("0+eps", "2-eps"), 2, 4, unshear));
    CHECK(shear_equivariance_check(win("-1/4-eps", "3/2+eps"), 2, 3, shear));
}

TEST_CASE("corner classes recover the inner maximal path") {
    auto one = corner_pair_check({0, 1}, {1, 1});
    CHECK(one.ok);
    CHECK(corner_pair_check({0, 1}, {2, 1}).ok);
    CHECK(corner_pair_check({0, 1}, {3, 1}).ok);
    auto sweep = corner_pair_sweep(7, 1);
    CHECK(sweep.ok);
    CHECK(sweep.windows == 17);
    auto wide = corner_pair_sweep(6, 3);
    CHECK(wide.ok);
    CHECK(wide.windows > 17);
    CHECK_FALSE(corner_pair_check({1, 1}, {0, 1}).ok);
}
