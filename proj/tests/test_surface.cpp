#include "pfh/surface.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "pfh/cylinder.hpp"
#include "pfh/f2.hpp"
#include "pfh/morse.hpp"
#include "pfh/rational.hpp"

using namespace pfh;

namespace {

std::map<long long, long long> nonzero_dims(const ChainComplexF2& cx) {
    std::map<long long, long long> out;
    for (const auto& [g, d] : cx.homology_dims())
        if (d) out[g] = d;
    return out;
}

MixedGenerator mixed(const SurfaceComplex& sc,
                     const std::vector<std::string>& names,
                     const std::string& cyl) {
    MixedGenerator g;
    for (const std::string& n : names) {
        int id = sc.data.point_id(n);
        REQUIRE(id >= 0);
        g.morse.push_back(id);
    }
    std::sort(g.morse.begin(), g.morse.end());
    if (!cyl.empty()) g.cyl = parse_orbit_set(cyl);
    return g;
}

std::vector<int> column_of(const SurfaceComplex& sc, const MixedGenerator& g) {
    int i = sc.gen_index(g);
    REQUIRE(i >= 0);
    return sc.cx.d[(size_t)i];
}

}  // namespace

TEST_CASE("surface configs and morse presentations") {
    CHECK_THROWS_AS(SurfaceConfig::nonseparating(0, 1), Error);
    CHECK_THROWS_AS(SurfaceConfig::nonseparating(2, -1), Error);
    CHECK_THROWS_AS(SurfaceConfig::split(-1, 0, 1), Error);
    CHECK(SurfaceConfig::nonseparating(2, 1).str() == "nonseparating g=2 d=1");
    CHECK(SurfaceConfig::split(0, 3, 2).str() == "separating g0=0 g1=3 d=2");

    MorseData non = nonseparating_morse_data(2);
    CHECK(non.points.size() == 8);
    CHECK(validate_morse(non).empty());
    CHECK(non.points[non.point_id("m")].index == 2);
    int from_m = 0, from_s = 0, from_rest = 0;
    for (const auto& [a, b] : non.boundary) {
        if (a == "m") ++from_m;
        else if (a == "s") ++from_s;
        else ++from_rest;
    }
    CHECK(from_m == 2);
    CHECK(from_s == 2);
    CHECK(from_rest == 0);  // saddles and minima are cycles

    MorseData sep = separating_morse_data(1, 2);
    CHECK(sep.points.size() == 12);
    CHECK(validate_morse(sep).empty());
    CHECK(sep.points[sep.point_id("m1")].numerator == 1);
    CHECK(sep.points[sep.point_id("h1")].numerator == 1);
    CHECK(sep.points[sep.point_id("k1")].numerator == 0);
    CHECK(sep.points[sep.point_id("k3")].numerator == 0);
    long long s0 = 0, s1 = 0;
    for (const MorsePoint& p : sep.points) {
        if (p.component == "sigma0") ++s0;
        if (p.component == "sigma1") ++s1;
    }
    CHECK(s0 == 5);
    CHECK(s1 == 7);
    CHECK(sep.boundary.size() == 2);
}

TEST_CASE("nonseparating complex at degree one") {
    SurfaceComplex sc = build_delta0(SurfaceConfig::nonseparating(2, 1));
    REQUIRE(sc.gens.size() == 8);

    std::set<std::string> names;
    for (size_t i = 0; i < sc.gens.size(); ++i) names.insert(sc.gen_str(i));
    std::vector<std::string> expect = {"s",    "m",    "k1",   "k2",
                                       "e[0]", "h[0]", "e[1]", "h[1]"};
    std::set<std::string> want_names(expect.begin(), expect.end());
    CHECK(names == want_names);

    std::vector<int> dm = column_of(sc, mixed(sc, {"m"}, ""));
    std::vector<int> want_dm = {sc.gen_index(mixed(sc, {}, "h[0]")),
                                sc.gen_index(mixed(sc, {}, "h[1]"))};
    std::sort(want_dm.begin(), want_dm.end());
    CHECK(dm == want_dm);

    std::vector<int> ds = column_of(sc, mixed(sc, {"s"}, ""));
    std::vector<int> want_ds = {sc.gen_index(mixed(sc, {}, "e[0]")),
                                sc.gen_index(mixed(sc, {}, "e[1]"))};
    std::sort(want_ds.begin(), want_ds.end());
    CHECK(ds == want_ds);

    CHECK(column_of(sc, mixed(sc, {"k1"}, "")).empty());
    CHECK(column_of(sc, mixed(sc, {}, "e[0]")).empty());
    CHECK(column_of(sc, mixed(sc, {}, "h[1]")).empty());

    std::map<long long, long long> want_h;
    want_h[0] = 1;
    want_h[1] = 3;
    CHECK(nonzero_dims(sc.cx) == want_h);

    SurfaceReport rep = verify_surface(SurfaceConfig::nonseparating(2, 1));
    CHECK(rep.ok);
    CHECK(rep.dim == 4);
    CHECK(rep.even == 1);
    CHECK(rep.odd == 3);
    CHECK(rep.sectors.empty());
}

TEST_CASE("nonseparating homology matches the closed form") {
    ParitySplit e21 = expected_nonseparating(2, 1);
    CHECK(e21.total == 4);
    ParitySplit e22 = expected_nonseparating(2, 2);
    CHECK(e22.total == 9);
    CHECK(e22.even == 5);
    CHECK(e22.odd == 4);
    CHECK(expected_nonseparating(3, 1).total == 6);
    CHECK(expected_nonseparating(5, 0).total == 1);

    std::vector<std::pair<long long, long long>> grid = {{1, 1}, {1, 2}, {2, 1},
                                                         {2, 2}, {3, 1}, {3, 2}};
    for (const auto& [g, d] : grid) {
        SurfaceReport rep = verify_surface(SurfaceConfig::nonseparating(g, d));
        CHECK(rep.ok);
    }
    SurfaceReport empty_rep = verify_surface(SurfaceConfig::nonseparating(4, 0));
    CHECK(empty_rep.ok);
    CHECK(empty_rep.dim == 1);

    // degree one always carries the full first homology of the surface
    for (long long g = 1; g <= 4; ++g) {
        SurfaceReport rep = verify_surface(SurfaceConfig::nonseparating(g, 1));
        CHECK(rep.ok);
        CHECK(rep.dim == 2 * g);
    }
}

TEST_CASE("separating sectors at genus zero") {
    SurfaceConfig cfg = SurfaceConfig::split(0, 0, 2);

    SurfaceComplex s0 = build_delta0(cfg, 0);
    CHECK(s0.gens.size() == 5);
    std::map<long long, long long> want_s0;
    want_s0[0] = 1;
    CHECK(nonzero_dims(s0.cx) == want_s0);

    SurfaceComplex s1 = build_delta0(cfg, 1);
    REQUIRE(s1.gens.size() == 11);
    F2Span span;
    long long rank = 0;
    for (size_t j = 0; j < s1.gens.size(); ++j)
        if (span.add(s1.cx.column(j))) ++rank;
    CHECK(rank == 4);

    std::vector<int> dhalf = column_of(s1, mixed(s1, {}, "e[1/2]"));
    std::vector<int> want_dhalf = {s1.gen_index(mixed(s1, {}, "e[0] h[1]")),
                                   s1.gen_index(mixed(s1, {}, "h[0] e[1]"))};
    std::sort(want_dhalf.begin(), want_dhalf.end());
    CHECK(dhalf == want_dhalf);

    std::vector<int> dmm = column_of(s1, mixed(s1, {"m0", "m1"}, ""));
    std::vector<int> want_dmm = {s1.gen_index(mixed(s1, {"m1"}, "h[0]")),
                                 s1.gen_index(mixed(s1, {"m0"}, "h[1]"))};
    std::sort(want_dmm.begin(), want_dmm.end());
    CHECK(dmm == want_dmm);

    std::vector<int> dhh = column_of(s1, mixed(s1, {}, "h[1/2]"));
    std::vector<int> want_dhh = {s1.gen_index(mixed(s1, {}, "h[0] h[1]"))};
    CHECK(dhh == want_dhh);
    CHECK(column_of(s1, mixed(s1, {"m0"}, "h[1]")) == want_dhh);
    CHECK(column_of(s1, mixed(s1, {}, "e[0] e[1]")).empty());

    std::map<long long, long long> want_s1;
    want_s1[0] = 2;
    want_s1[1] = 1;
    CHECK(nonzero_dims(s1.cx) == want_s1);

    SurfaceComplex s2 = build_delta0(cfg, 2);
    CHECK(s2.gens.size() == 5);
    CHECK(nonzero_dims(s2.cx) == want_s0);

    SurfaceReport rep = verify_surface(cfg);
    CHECK(rep.ok);
    REQUIRE(rep.sectors.size() == 3);
    CHECK(rep.sectors[0].dim == 1);
    CHECK(rep.sectors[0].even == 1);
    CHECK(rep.sectors[1].dim == 3);
    CHECK(rep.sectors[1].even == 2);
    CHECK(rep.sectors[1].odd == 1);
    CHECK(rep.sectors[2].dim == 1);
    // the literal clause would drop the odd line in the middle sector;
    // the computed homology keeps it
    CHECK(rep.sectors[1].want == 3);
    CHECK(rep.sectors[1].literal_want == 2);
    CHECK(rep.detail.find("strict clause") != std::string::npos);

    SurfaceReport r1 = verify_surface(SurfaceConfig::split(0, 0, 1));
    CHECK(r1.ok);
    REQUIRE(r1.sectors.size() == 2);
    CHECK(r1.sectors[0].dim == 1);
    CHECK(r1.sectors[1].dim == 1);

    SurfaceReport r3 = verify_surface(SurfaceConfig::split(0, 0, 3));
    CHECK(r3.ok);
    REQUIRE(r3.sectors.size() == 4);
    CHECK(r3.sectors[0].dim == 1);
    CHECK(r3.sectors[1].dim == 3);
    CHECK(r3.sectors[2].dim == 3);
    CHECK(r3.sectors[3].dim == 1);
}

TEST_CASE("separating closed form with genus") {
    SectorExpectation e10 = expected_separating_sector(1, 0, 1, 0);
    CHECK(e10.total == 3);
    CHECK(e10.even == 1);
    CHECK(e10.odd == 2);
    SectorExpectation e11 = expected_separating_sector(1, 0, 1, 1);
    CHECK(e11.total == 1);
    CHECK(e11.even == 1);

    std::vector<SurfaceConfig> grid = {
        SurfaceConfig::split(1, 0, 1), SurfaceConfig::split(0, 1, 1),
        SurfaceConfig::split(1, 1, 1), SurfaceConfig::split(1, 0, 2),
        SurfaceConfig::split(0, 0, 0)};
    for (const SurfaceConfig& cfg : grid) {
        SurfaceReport rep = verify_surface(cfg);
        CHECK(rep.ok);
    }
}

TEST_CASE("separating degree tables") {
    std::vector<long long> c02 = {0};
    CHECK(separating_degrees(0, 2, false) == c02);
    std::vector<long long> c24 = {0, 2, 4, 5, 7};
    CHECK(separating_degrees(2, 4, false) == c24);
    CHECK(separating_degrees(2, 4, true) == c24);
    std::vector<long long> c12 = {0, 2, 3};
    CHECK(separating_degrees(1, 2, false) == c12);
    std::vector<long long> c12s = {0, 2};
    CHECK(separating_degrees(1, 2, true) == c12s);
    CHECK(separating_degrees(3, 4, false) == separating_degrees(1, 4, false));
    std::vector<long long> c14 = {0, 2, 7};
    CHECK(separating_degrees(1, 4, false) == c14);
    std::vector<long long> c00 = {0};
    CHECK(separating_degrees(0, 0, false) == c00);
    CHECK_THROWS_AS(separating_degrees(3, 2, false), Error);
    CHECK_THROWS_AS(separating_degrees(-1, 2, false), Error);
}

TEST_CASE("grading shift spot values") {
    for (long long d = 1; d <= 4; ++d) {
        CHECK(grading_shift(0, 0, 1, 2 * d, 2 * d, d) == 2 - 6 * d);
        CHECK(grading_shift(1, 0, 0, 2 * d, 7, d) == -2 * d);
    }
    CHECK(grading_shift(0, 5, 0, 3, 4, 2) == 0);
    CHECK(sector_shift(0, 3, 2) == 0);
    CHECK(sector_shift(1, 0, 2) == -4);
    CHECK(sector_shift(2, 1, 3) == -6);
}

TEST_CASE("morse and cylinder moves anticommute") {
    std::vector<SurfaceComplex> complexes;
    complexes.push_back(build_delta0(SurfaceConfig::nonseparating(2, 2)));
    complexes.push_back(build_delta0(SurfaceConfig::split(0, 0, 2), 1));
    complexes.push_back(build_delta0(SurfaceConfig::split(1, 0, 2)));

    for (const SurfaceComplex& sc : complexes) {
        size_t n = sc.gens.size();
        std::vector<std::vector<int>> dm(n), dc(n);
        for (size_t j = 0; j < n; ++j)
            for (int t : sc.cx.d[j]) {
                if (sc.gens[j].morse == sc.gens[(size_t)t].morse)
                    dc[j].push_back(t);
                else
                    dm[j].push_back(t);
            }
        auto apply = [&](const std::vector<std::vector<int>>& dd,
                         const BitVec& v) {
            BitVec out(n);
            for (size_t j = 0; j < n; ++j)
                if (v.get(j))
                    for (int t : dd[j]) out.flip((size_t)t);
            return out;
        };
        for (size_t j = 0; j < n; ++j) {
            BitVec e(n);
            e.flip(j);
            CHECK_FALSE(apply(dm, apply(dm, e)).any());
            CHECK_FALSE(apply(dc, apply(dc, e)).any());
            BitVec anti = apply(dm, apply(dc, e));
            anti ^= apply(dc, apply(dm, e));
            CHECK_FALSE(anti.any());
        }
    }
}

TEST_CASE("numerator bookkeeping in separating complexes") {
    SurfaceConfig cfg = SurfaceConfig::split(1, 1, 2);
    SurfaceComplex all = build_delta0(cfg);
    size_t total = 0;
    for (long long p = 0; p <= 2; ++p) {
        SurfaceComplex sec = build_delta0(cfg, p);
        total += sec.gens.size();
        for (size_t i = 0; i < sec.gens.size(); ++i)
            CHECK(sec.numerator(i) == p);
    }
    CHECK(total == all.gens.size());
    for (size_t j = 0; j < all.gens.size(); ++j)
        for (int t : all.cx.d[j])
            CHECK(all.numerator(j) == all.numerator((size_t)t));

    CHECK_THROWS_AS(build_delta0(SurfaceConfig::nonseparating(2, 1), 0), Error);

    SurfaceComplex zero = build_delta0(SurfaceConfig::split(0, 0, 0), 0);
    REQUIRE(zero.gens.size() == 1);
    CHECK(zero.gen_str(0) == "1");
}
