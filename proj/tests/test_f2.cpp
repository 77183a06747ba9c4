#include <random>

#include "doctest.h"
#include "pfh/f2.hpp"

using namespace pfh;

namespace {

BitVec bv(size_t n, std::vector<int> bits) {
    BitVec v(n);
    for (int b : bits) v.flip(b);
    return v;
}

// known-homology complex scrambled by random basis changes: the conjugation
// g_i += g_j (same grade) maps col_i += col_j on sources and row_j += row_i
// on targets, which preserves d^2 = 0 and all homology dimensions
struct Scrambled {
    ChainComplexF2 cx;
    std::map<long long, long long> expected;
};

Scrambled scrambled_complex(std::mt19937& rng, bool mod2) {
    ChainComplexF2 cx;
    cx.mod2 = mod2;
    std::map<long long, long long> expected;
    std::vector<std::vector<bool>> dense;

    auto add_gen = [&](long long g) {
        cx.grade.push_back(g);
        return (int)cx.grade.size() - 1;
    };
    int pairs = 2 + int(rng() % 4);
    int frees = int(rng() % 4);
    std::vector<std::pair<int, int>> arrows;
    for (int k = 0; k < pairs; ++k) {
        long long g = 1 + (long long)(rng() % 3);
        int a = add_gen(g);
        int b = add_gen(mod2 ? g + 1 : g - 1);
        arrows.push_back({a, b});
    }
    for (int k = 0; k < frees; ++k) {
        long long g = (long long)(rng() % 4);
        add_gen(g);
        long long key = mod2 ? ((g % 2) + 2) % 2 : g;
        ++expected[key];
    }
    size_t n = cx.grade.size();
    dense.assign(n, std::vector<bool>(n, false));
    for (auto [a, b] : arrows) dense[b][a] = true;

    for (int step = 0; step < 300; ++step) {
        size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        auto keyof = [&](size_t t) { return mod2 ? ((cx.grade[t] % 2) + 2) % 2 : cx.grade[t]; };
        if (keyof(i) != keyof(j)) continue;
        for (size_t r = 0; r < n; ++r) dense[r][i] = dense[r][i] ^ dense[r][j];
        for (size_t c = 0; c < n; ++c) dense[j][c] = dense[j][c] ^ dense[i][c];
    }
    cx.d.assign(n, {});
    for (size_t c = 0; c < n; ++c)
        for (size_t r = 0; r < n; ++r)
            if (dense[r][c]) cx.d[c].push_back((int)r);
    return {cx, expected};
}

}  // namespace

TEST_CASE("bit vectors") {
    BitVec v(100);
    CHECK_FALSE(v.any());
    CHECK(v.lowest() == -1);
    v.flip(3);
    v.flip(77);
    CHECK(v.get(3));
    CHECK(v.get(77));
    CHECK(v.lowest() == 3);
    CHECK(v.popcount() == 2);
    v ^= bv(100, {3, 40});
    CHECK(v.bits() == std::vector<int>{40, 77});
    CHECK_THROWS_AS(v ^= BitVec(99), Error);
}

TEST_CASE("span reduction and membership") {
    F2Span span;
    CHECK(span.add(bv(8, {3, 5})));
    CHECK(span.add(bv(8, {5})));
    CHECK_FALSE(span.add(bv(8, {3})));
    CHECK(span.contains(bv(8, {3, 5})));
    CHECK(span.contains(bv(8, {3})));
    CHECK_FALSE(span.contains(bv(8, {2})));
    CHECK(span.rank() == 2);
}

TEST_CASE("rank and kernel with tracked combinations") {
    std::vector<BitVec> cols = {bv(4, {0}), bv(4, {1}), bv(4, {0, 1}), bv(4, {})};
    auto kb = rank_and_kernel(cols);
    CHECK(kb.rank == 2);
    REQUIRE(kb.combos.size() == 2);
    CHECK(kb.combos[0].bits() == std::vector<int>{0, 1, 2});
    CHECK(kb.combos[1].bits() == std::vector<int>{3});
}

TEST_CASE("homology of small complexes") {
    ChainComplexF2 cx;
    cx.grade = {1, 1, 0};          // x, y, z
    cx.d = {{2}, {2}, {}};         // dx = dy = z
    auto dims = cx.homology_dims();
    REQUIRE(dims.size() == 1);
    CHECK(dims[1] == 1);
    auto reps = cx.homology_reps();
    REQUIRE(reps[1].size() == 1);
    CHECK(reps[1][0].bits() == std::vector<int>{0, 1});
    CHECK_FALSE(cx.apply_d(reps[1][0]).any());

    ChainComplexF2 pair;
    pair.grade = {1, 0};
    pair.d = {{1}, {}};
    CHECK(pair.homology_dims().empty());

    ChainComplexF2 circle;
    circle.mod2 = true;
    circle.grade = {0, 1};
    circle.d = {{}, {}};
    auto cdims = circle.homology_dims();
    CHECK(cdims[0] == 1);
    CHECK(cdims[1] == 1);
}

TEST_CASE("square-zero violations are caught with a witness") {
    ChainComplexF2 cx;
    cx.grade = {2, 1, 0};
    cx.d = {{1}, {2}, {}};
    auto w = cx.d_squared_witness();
    REQUIRE(w.has_value());
    CHECK(w->first == 0);
    CHECK(w->second == 2);
    CHECK_THROWS_AS(cx.assert_d_squared_zero(), DifferentialNotSquareZero);
    CHECK_THROWS_AS(cx.homology_dims(), DifferentialNotSquareZero);

    ChainComplexF2 bad;
    bad.grade = {2, 0};
    bad.d = {{1}, {}};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("homology survives random change of basis") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 40; ++trial) {
        auto [cx, expected] = scrambled_complex(rng, trial % 2 == 1);
        CHECK_FALSE(cx.d_squared_witness().has_value());
        CHECK(cx.homology_dims() == expected);
    }
}

TEST_CASE("two-step filtration pages") {
    ChainComplexF2 cx;
    cx.grade = {1, 1, 0};   // x, y, z
    cx.d = {{2}, {2}, {}};
    std::vector<long long> level = {0, 1, 0};
    auto pages = spectral_pages(cx, level, 3);
    REQUIRE(pages.size() == 3);
    PageDims e1 = {{{1, 1}, 1}};
    CHECK(pages[0] == e1);
    CHECK(pages[1] == e1);
    CHECK(pages[2] == e1);

    std::vector<long long> bad = {0, 1, 1};
    CHECK_THROWS_AS(spectral_pages(cx, bad, 2), FiltrationViolated);
}

TEST_CASE("stable page totals match homology") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        auto [cx, expected] = scrambled_complex(rng, trial % 2 == 0);
        std::vector<long long> level(cx.size());
        for (auto& l : level) l = (long long)(rng() % 4);
        for (bool changed = true; changed;) {
            changed = false;
            for (size_t j = 0; j < cx.size(); ++j)
                for (int i : cx.d[j])
                    if (level[i] > level[j]) {
                        level[i] = level[j];
                        changed = true;
                    }
        }
        int pages = 7;  // past the filtration length, so the last page is stable
        auto pg = spectral_pages(cx, level, pages);
        std::map<long long, long long> totals;
        for (const auto& [key, dim] : pg.back()) totals[key.second] += dim;
        CHECK(totals == cx.homology_dims());
        std::map<long long, long long> prev;
        for (const auto& [key, dim] : pg[pages - 2]) prev[key.second] += dim;
        CHECK(prev == totals);
    }
}
