#include "pfh/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "pfh/rational.hpp"

namespace pfh {

SurfaceConfig SurfaceConfig::nonseparating(long long g, long long d) {
    if (g < 1) throw Error("nonseparating twist needs genus at least one");
    if (d < 0) throw Error("degree must be nonnegative");
    SurfaceConfig c;
    c.separating = false;
    c.g = g;
    c.d = d;
    return c;
}

SurfaceConfig SurfaceConfig::split(long long g0, long long g1, long long d) {
    if (g0 < 0 || g1 < 0) throw Error("separating pieces need genus >= 0");
    if (d < 0) throw Error("degree must be nonnegative");
    SurfaceConfig c;
    c.separating = true;
    c.g0 = g0;
    c.g1 = g1;
    c.d = d;
    return c;
}

std::string SurfaceConfig::str() const {
    std::ostringstream out;
    if (separating)
        out << "separating g0=" << g0 << " g1=" << g1 << " d=" << d;
    else
        out << "nonseparating g=" << g << " d=" << d;
    return out.str();
}

MorseData nonseparating_morse_data(long long g) {
    if (g < 1) throw Error("nonseparating twist needs genus at least one");
    MorseData data;
    data.points = {{"e0", 0, 0, "sigma"}, {"h0", 1, 0, "sigma"},
                   {"e1", 0, 0, "sigma"}, {"h1", 1, 0, "sigma"},
                   {"s", 1, 0, "sigma"},  {"m", 2, 0, "sigma"}};
    for (long long i = 1; i <= 2 * (g - 1); ++i)
        data.points.push_back({"k" + std::to_string(i), 1, 0, "sigma"});
    data.boundary = {{"m", "h0"}, {"m", "h1"}, {"s", "e0"}, {"s", "e1"}};
    return data;
}

MorseData separating_morse_data(long long g0, long long g1) {
    if (g0 < 0 || g1 < 0) throw Error("separating pieces need genus >= 0");
    MorseData data;
    data.points = {{"e0", 0, 0, "sigma0"}, {"h0", 1, 0, "sigma0"},
                   {"m0", 2, 0, "sigma0"}, {"e1", 0, 1, "sigma1"},
                   {"h1", 1, 1, "sigma1"}, {"m1", 2, 1, "sigma1"}};
    // the kernel saddles are recounted with numerator zero so that the
    // differential conserves the total numerator
    for (long long i = 1; i <= 2 * (g0 + g1); ++i)
        data.points.push_back({"k" + std::to_string(i), 1, 0,
                               i <= 2 * g0 ? "sigma0" : "sigma1"});
    data.boundary = {{"m0", "h0"}, {"m1", "h1"}};
    return data;
}

namespace {

struct Letters {
    std::map<int, OrbitUnit> boundary;  // point id -> twist region orbit
    std::vector<int> interior;
};

Letters classify(const MorseData& data) {
    Letters out;
    auto tag = [&](const char* name, OrbitType t, long long slope) {
        int id = data.point_id(name);
        if (id < 0) throw Error(std::string("missing boundary point ") + name);
        out.boundary[id] = OrbitUnit{Vec2{slope, 1}, t};
    };
    tag("e0", OrbitType::Elliptic, 0);
    tag("h0", OrbitType::Hyperbolic, 0);
    tag("e1", OrbitType::Elliptic, 1);
    tag("h1", OrbitType::Hyperbolic, 1);
    for (size_t i = 0; i < data.points.size(); ++i)
        if (!out.boundary.count((int)i)) out.interior.push_back((int)i);
    return out;
}

void interior_multisets(const MorseData& data, const std::vector<int>& ids,
                        long long k, size_t from, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (size_t i = from; i < ids.size(); ++i) {
        if (data.points[ids[i]].hyperbolic() && !cur.empty() &&
            cur.back() == ids[i])
            continue;
        cur.push_back(ids[i]);
        interior_multisets(data, ids, k - 1, i, cur, out);
        cur.pop_back();
    }
}

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long out = 1;
    for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace

int SurfaceComplex::gen_index(const MixedGenerator& g) const {
    auto it = std::lower_bound(gens.begin(), gens.end(), g);
    if (it == gens.end() || !(*it == g)) return -1;
    return (int)(it - gens.begin());
}

std::string SurfaceComplex::gen_str(size_t i) const {
    const MixedGenerator& g = gens[i];
    std::ostringstream out;
    for (size_t k = 0; k < g.morse.size();) {
        size_t r = k;
        while (r < g.morse.size() && g.morse[r] == g.morse[k]) ++r;
        if (out.tellp() > 0) out << ' ';
        out << data.points[g.morse[k]].name;
        if (r - k > 1) out << '^' << (r - k);
        k = r;
    }
    if (!g.cyl.factors.empty()) {
        if (out.tellp() > 0) out << ' ';
        out << g.cyl.str();
    }
    if (out.tellp() == 0) return "1";
    return out.str();
}

long long SurfaceComplex::numerator(size_t i) const {
    const MixedGenerator& g = gens[i];
    long long p = g.cyl.total().p;
    for (int m : g.morse) p += data.points[m].numerator;
    return p;
}

SurfaceComplex build_delta0(const SurfaceConfig& config, long long sector) {
    if (sector >= 0 && !config.separating)
        throw Error("numerator sectors need a separating twist");

    SurfaceComplex sc;
    sc.config = config;
    sc.sector = sector;
    sc.data = config.separating ? separating_morse_data(config.g0, config.g1)
                                : nonseparating_morse_data(config.g);
    if (!validate_morse(sc.data).empty())
        throw Error("surface morse data failed validation");

    Letters let = classify(sc.data);
    long long d = config.d;

    Window w{Bound(Frac(0), -1), Bound(Frac(1), 1)};
    std::map<std::pair<long long, long long>, std::vector<OrbitSet>> blocks;
    blocks[{0, 0}] = {OrbitSet{}};
    for (long long Qc = 1; Qc <= d; ++Qc)
        for (long long P = 0; P <= Qc; ++P)
            blocks[{P, Qc}] = enumerate_generators(w, P, Qc);
    for (auto& [key, blk] : blocks) std::sort(blk.begin(), blk.end());

    auto numerator_of = [&](const std::vector<int>& M, const OrbitSet& c) {
        long long p = c.total().p;
        for (int i : M) p += sc.data.points[i].numerator;
        return p;
    };

    for (long long k = 0; k <= d; ++k) {
        std::vector<std::vector<int>> part;
        std::vector<int> cur;
        interior_multisets(sc.data, let.interior, k, 0, cur, part);
        long long Qc = d - k;
        for (const auto& M : part)
            for (long long P = 0; P <= Qc; ++P) {
                auto it = blocks.find({P, Qc});
                if (it == blocks.end()) continue;
                for (const OrbitSet& c : it->second) {
                    if (sector >= 0 && numerator_of(M, c) != sector) continue;
                    sc.gens.push_back(MixedGenerator{M, c});
                }
            }
    }
    std::sort(sc.gens.begin(), sc.gens.end());

    // rounding edges inside each twist region block, shared across all
    // choices of the Morse part
    std::map<std::pair<long long, long long>, std::vector<std::vector<int>>>
        block_edges;
    for (const auto& [key, blk] : blocks) {
        auto& e = block_edges[key];
        e.assign(blk.size(), {});
        for (size_t a = 0; a < blk.size(); ++a)
            for (size_t b = 0; b < blk.size(); ++b)
                if (a != b && is_rounding(blk[a], blk[b])) e[a].push_back((int)b);
    }

    std::vector<std::vector<int>> dmap(sc.data.points.size());
    for (const auto& [a, b] : sc.data.boundary)
        dmap[sc.data.point_id(a)].push_back(sc.data.point_id(b));

    size_t n = sc.gens.size();
    sc.cx.mod2 = true;
    sc.cx.grade.assign(n, 0);
    sc.cx.d.assign(n, {});
    for (size_t j = 0; j < n; ++j) {
        const MixedGenerator& g = sc.gens[j];
        long long hyp = g.cyl.hyperbolic_count();
        for (int i : g.morse) hyp += sc.data.points[i].hyperbolic() ? 1 : 0;
        sc.cx.grade[j] = hyp % 2;

        std::vector<int>& col = sc.cx.d[j];
        for (size_t k = 0; k < g.morse.size(); ++k) {
            if (k > 0 && g.morse[k] == g.morse[k - 1]) continue;
            for (int q : dmap[g.morse[k]]) {
                MixedGenerator t;
                t.morse = g.morse;
                t.morse.erase(t.morse.begin() + (long long)k);
                t.cyl = g.cyl;
                if (let.boundary.count(q)) {
                    OrbitUnit u = let.boundary.at(q);
                    std::vector<OrbitUnit> us = g.cyl.units();
                    if (u.type == OrbitType::Hyperbolic &&
                        std::find(us.begin(), us.end(), u) != us.end())
                        continue;  // hyperbolic orbits stay simple
                    us.push_back(u);
                    t.cyl = orbit_set_from_units(us);
                } else {
                    if (sc.data.points[q].hyperbolic() &&
                        std::count(t.morse.begin(), t.morse.end(), q))
                        continue;
                    t.morse.insert(
                        std::lower_bound(t.morse.begin(), t.morse.end(), q), q);
                }
                int ti = sc.gen_index(t);
                if (ti < 0)
                    throw Error("surface differential left the generator set");
                col.push_back(ti);
            }
        }

        Vec2 tot = g.cyl.total();
        std::pair<long long, long long> key{tot.p, tot.q};
        const std::vector<OrbitSet>& blk = blocks.at(key);
        size_t bi = (size_t)(std::lower_bound(blk.begin(), blk.end(), g.cyl) -
                             blk.begin());
        for (int b : block_edges.at(key)[bi]) {
            MixedGenerator t;
            t.morse = g.morse;
            t.cyl = blk[(size_t)b];
            int ti = sc.gen_index(t);
            if (ti < 0)
                throw Error("surface differential left the generator set");
            col.push_back(ti);
        }
        std::sort(col.begin(), col.end());
    }
    sc.cx.validate();
    sc.cx.assert_d_squared_zero();
    return sc;
}

ParitySplit expected_nonseparating(long long g, long long d) {
    if (g < 1) throw Error("nonseparating twist needs genus at least one");
    if (d < 0) throw Error("degree must be nonnegative");
    long long K = 2 * (g - 1);
    ParitySplit out;
    long long top = binom(K, d);
    out.total += top;
    (d % 2 == 0 ? out.even : out.odd) += top;
    // two lines per lower degree block, one of each parity
    for (long long dp = 1; dp <= d; ++dp) {
        long long mult = binom(K, d - dp);
        out.total += 2 * dp * mult;
        out.even += dp * mult;
        out.odd += dp * mult;
    }
    return out;
}

std::vector<long long> separating_degrees(long long p, long long q,
                                          bool strict_clause) {
    if (p < 0 || q < 0 || p > q)
        throw Error("separating degrees need 0 <= p <= q");
    long long pp = std::min(p, q - p);
    std::vector<long long> degs;
    for (long long e = 0; e <= 2 * pp; e += 2) degs.push_back(e);
    if (strict_clause ? pp > 1 : pp >= 1)
        for (long long o = 2 * (q - pp) + 1; o <= 2 * q - 1; o += 2)
            degs.push_back(o);
    return degs;
}

SectorExpectation expected_separating_sector(long long g0, long long g1,
                                             long long d, long long p) {
    if (g0 < 0 || g1 < 0 || d < 0 || p < 0 || p > d)
        throw Error("sector expectation needs 0 <= p <= d and genus >= 0");
    SectorExpectation out;
    long long K = 2 * (g0 + g1);
    for (long long q = p; q <= d; ++q) {
        long long mult = binom(K, d - q);
        if (!mult) continue;
        for (long long deg : separating_degrees(p, q, false)) {
            out.total += mult;
            (((deg + d - q) % 2 == 0) ? out.even : out.odd) += mult;
        }
        out.literal_total +=
            mult * (long long)separating_degrees(p, q, true).size();
    }
    return out;
}

long long grading_shift(long long k, long long p, long long eta1, long long g0,
                        long long g1, long long d) {
    return k * (1 - 2 * g0 + 2 * d - 2 * p - k) +
           eta1 * (2 - 2 * g0 - 2 * g1 + 2 * d);
}

long long sector_shift(long long p, long long g0, long long d) {
    return p * p - p * (1 - 2 * g0 + 2 * d);
}

SurfaceReport verify_surface(const SurfaceConfig& config) {
    SurfaceReport rep;
    rep.config = config;
    std::ostringstream detail;
    if (!config.separating) {
        SurfaceComplex sc = build_delta0(config);
        std::map<long long, long long> dims = sc.cx.homology_dims();
        rep.even = dims.count(0) ? dims.at(0) : 0;
        rep.odd = dims.count(1) ? dims.at(1) : 0;
        rep.dim = rep.even + rep.odd;
        ParitySplit want = expected_nonseparating(config.g, config.d);
        rep.want = want.total;
        rep.want_even = want.even;
        rep.want_odd = want.odd;
        rep.ok = rep.dim == want.total && rep.even == want.even &&
                 rep.odd == want.odd;
        detail << config.str() << ": homology " << rep.dim << " (" << rep.even
               << " even, " << rep.odd << " odd), closed form " << want.total;
    } else {
        rep.ok = true;
        for (long long p = 0; p <= config.d; ++p) {
            SurfaceComplex sc = build_delta0(config, p);
            std::map<long long, long long> dims = sc.cx.homology_dims();
            SectorOutcome so;
            so.p = p;
            so.even = dims.count(0) ? dims.at(0) : 0;
            so.odd = dims.count(1) ? dims.at(1) : 0;
            so.dim = so.even + so.odd;
            SectorExpectation want =
                expected_separating_sector(config.g0, config.g1, config.d, p);
            so.want = want.total;
            so.want_even = want.even;
            so.want_odd = want.odd;
            so.literal_want = want.literal_total;
            so.ok = so.dim == want.total && so.even == want.even &&
                    so.odd == want.odd;
            rep.ok = rep.ok && so.ok;
            rep.dim += so.dim;
            rep.even += so.even;
            rep.odd += so.odd;
            rep.want += so.want;
            rep.want_even += so.want_even;
            rep.want_odd += so.want_odd;
            detail << "sector " << p << ": " << so.dim << " vs " << so.want;
            if (so.literal_want != so.want)
                detail << " (the strict clause reads " << so.literal_want << ")";
            detail << "; ";
            rep.sectors.push_back(so);
        }
        detail << config.str();
    }
    rep.detail = detail.str();
    return rep;
}

}  // namespace pfh
