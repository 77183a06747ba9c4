#include "pfh/cylinder.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <thread>
#include <tuple>

namespace pfh {

bool unit_before(const OrbitUnit& a, const OrbitUnit& b) {
    Frac sa = slope_of(a.v), sb = slope_of(b.v);
    if (sa != sb) return sa > sb;
    return a.type == OrbitType::Elliptic && b.type == OrbitType::Hyperbolic;
}

namespace {

struct UnitLess {
    bool operator()(const OrbitUnit& a, const OrbitUnit& b) const { return unit_before(a, b); }
};

bool factor_before(const OrbitFactor& a, const OrbitFactor& b) {
    return unit_before({a.v, a.type}, {b.v, b.type});
}

long long hyp_count(const std::vector<OrbitUnit>& us) {
    long long c = 0;
    for (const auto& u : us) c += u.type == OrbitType::Hyperbolic;
    return c;
}

}  // namespace

OrbitSet OrbitSet::of(std::vector<OrbitFactor> fs) {
    for (const auto& f : fs) {
        if (!is_primitive(f.v))
            throw NonPrimitiveVector("orbit (" + std::to_string(f.v.p) + "," + std::to_string(f.v.q) + ")");
        if (f.mult < 1) throw Error("orbit multiplicity < 1");
        if (f.type == OrbitType::Hyperbolic && f.mult != 1)
            throw Error("hyperbolic orbit with multiplicity " + std::to_string(f.mult));
    }
    std::sort(fs.begin(), fs.end(), factor_before);
    OrbitSet out;
    for (const auto& f : fs) {
        if (!out.factors.empty() && out.factors.back().v == f.v && out.factors.back().type == f.type) {
            if (f.type == OrbitType::Hyperbolic) throw Error("hyperbolic orbit repeated");
            out.factors.back().mult += f.mult;
        } else {
            out.factors.push_back(f);
        }
    }
    return out;
}

Vec2 OrbitSet::total() const {
    Vec2 t{0, 0};
    for (const auto& f : factors) {
        t.p += f.v.p * f.mult;
        t.q += f.v.q * f.mult;
    }
    return t;
}

long long OrbitSet::unit_count() const {
    long long c = 0;
    for (const auto& f : factors) c += f.mult;
    return c;
}

long long OrbitSet::elliptic_weight() const {
    long long c = 0;
    for (const auto& f : factors)
        if (f.type == OrbitType::Elliptic) c += f.mult;
    return c;
}

long long OrbitSet::hyperbolic_count() const {
    long long c = 0;
    for (const auto& f : factors) c += f.type == OrbitType::Hyperbolic;
    return c;
}

std::vector<OrbitUnit> OrbitSet::units() const {
    std::vector<OrbitUnit> out;
    for (const auto& f : factors)
        for (long long k = 0; k < f.mult; ++k) out.push_back({f.v, f.type});
    return out;
}

ConvexPath OrbitSet::path() const {
    std::vector<std::pair<Vec2, long long>> fs;
    for (const auto& f : factors) fs.push_back({f.v, f.mult});
    return path_of(fs);
}

std::string OrbitSet::str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += ' ';
        out += f.type == OrbitType::Elliptic ? 'e' : 'h';
        out += '[' + slope_of(f.v).str() + ']';
        if (f.mult > 1) out += '^' + std::to_string(f.mult);
    }
    return out;
}

bool OrbitSet::operator<(const OrbitSet& o) const {
    auto key = [](const OrbitFactor& f) {
        return std::tuple(f.v.q, f.v.p, f.type == OrbitType::Hyperbolic, f.mult);
    };
    return std::lexicographical_compare(
        factors.begin(), factors.end(), o.factors.begin(), o.factors.end(),
        [&](const OrbitFactor& x, const OrbitFactor& y) { return key(x) < key(y); });
}

OrbitSet orbit_set_from_units(const std::vector<OrbitUnit>& us) {
    std::vector<OrbitFactor> fs;
    for (const auto& u : us) fs.push_back({u.v, u.type, 1});
    return OrbitSet::of(fs);
}

OrbitSet parse_orbit_set(const std::string& s) {
    std::vector<OrbitFactor> fs;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skip_ws();
    if (s.substr(i) == "1") return OrbitSet::of({});
    while (i < s.size()) {
        OrbitFactor f;
        if (s[i] == 'e') f.type = OrbitType::Elliptic;
        else if (s[i] == 'h') f.type = OrbitType::Hyperbolic;
        else throw Error("bad orbit set: " + s);
        ++i;
        if (i >= s.size() || s[i] != '[') throw Error("bad orbit set: " + s);
        size_t close = s.find(']', i);
        if (close == std::string::npos) throw Error("bad orbit set: " + s);
        Frac slope = parse_frac(s.substr(i + 1, close - i - 1));
        f.v = {slope.p, slope.q};
        i = close + 1;
        if (i < s.size() && s[i] == '^') {
            size_t end = i + 1;
            while (end < s.size() && s[end] != ' ') ++end;
            f.mult = std::stoll(s.substr(i + 1, end - i - 1));
            i = end;
        }
        fs.push_back(f);
        skip_ws();
    }
    return OrbitSet::of(fs);
}

std::vector<OrbitSet> enumerate_generators(const Window& w, long long P, long long Q) {
    if (Q < 1) throw Error("enumerate_generators: Q < 1");
    std::vector<OrbitSet> out;
    if (!(Frac(P, Q) > w.x1 && Frac(P, Q) < w.x2)) return out;
    std::vector<Vec2> slopes = farey_in_interval(w.x1, w.x2, Q);
    std::reverse(slopes.begin(), slopes.end());  // steep first

    std::vector<std::pair<Vec2, long long>> chosen;
    auto emit = [&] {
        size_t k = chosen.size();
        for (size_t mask = 0; mask < (size_t(1) << k); ++mask) {
            std::vector<OrbitFactor> fs;
            for (size_t t = 0; t < k; ++t) {
                auto [v, m] = chosen[t];
                if (mask >> t & 1) {
                    if (m > 1) fs.push_back({v, OrbitType::Elliptic, m - 1});
                    fs.push_back({v, OrbitType::Hyperbolic, 1});
                } else {
                    fs.push_back({v, OrbitType::Elliptic, m});
                }
            }
            out.push_back(OrbitSet::of(fs));
        }
    };
    std::function<void(size_t, long long, long long)> rec = [&](size_t idx, long long Pr, long long Qr) {
        if (Qr == 0) {
            if (Pr == 0) emit();
            return;
        }
        if (idx == slopes.size()) return;
        Frac hi = slope_of(slopes[idx]) * Frac(Qr);
        Frac lo = slope_of(slopes.back()) * Frac(Qr);
        if (Frac(Pr) > hi || Frac(Pr) < lo) return;
        const auto [p, q] = slopes[idx];
        for (long long m = 0; m * q <= Qr; ++m) {
            if (m > 0) chosen.push_back({slopes[idx], m});
            rec(idx + 1, Pr - m * p, Qr - m * q);
            if (m > 0) chosen.pop_back();
        }
    };
    rec(0, P, Q);
    return out;
}

OrbitSet e_generator(const Window& w, long long P, long long Q) {
    ConvexPath e = e_path(w.x1, w.x2, P, Q);
    std::vector<OrbitFactor> fs;
    for (const auto& edge : e.edges) fs.push_back({edge.v, OrbitType::Elliptic, edge.mult});
    return OrbitSet::of(fs);
}

std::vector<OrbitSet> h_variants(const OrbitSet& all_elliptic) {
    std::vector<OrbitSet> out;
    for (size_t t = 0; t < all_elliptic.factors.size(); ++t) {
        if (all_elliptic.factors[t].type != OrbitType::Elliptic)
            throw Error("h_variants: input has a hyperbolic factor");
        std::vector<OrbitFactor> fs;
        for (size_t s = 0; s < all_elliptic.factors.size(); ++s) {
            OrbitFactor f = all_elliptic.factors[s];
            if (s == t) {
                if (f.mult > 1) fs.push_back({f.v, OrbitType::Elliptic, f.mult - 1});
                fs.push_back({f.v, OrbitType::Hyperbolic, 1});
            } else {
                fs.push_back(f);
            }
        }
        out.push_back(OrbitSet::of(fs));
    }
    return out;
}

long long relative_index(const OrbitSet& a, const OrbitSet& b) {
    if (a.total() != b.total()) throw TotalMismatch(a.str() + " vs " + b.str());
    Frac twice = (area_pdq(b.path()) - area_pdq(a.path())) * Frac(2);
    if (!twice.is_integer()) throw Error("area difference not half-integral");
    return (b.elliptic_weight() - a.elliptic_weight()) + twice.p;
}

long long area_determinant_identity(const OrbitSet& a, const OrbitSet& b) {
    if (a.total() != b.total()) throw TotalMismatch(a.str() + " vs " + b.str());
    Frac twice = (area_pdq(b.path()) - area_pdq(a.path())) * Frac(2);
    long long via_area = twice.p;
    auto pair_sum = [](const OrbitSet& g) {
        auto us = g.units();
        long long s = 0;
        for (size_t i = 0; i < us.size(); ++i)
            for (size_t j = i + 1; j < us.size(); ++j) s += det2(us[i].v, us[j].v);
        return s;
    };
    long long via_det = pair_sum(b) - pair_sum(a);
    if (via_area != via_det)
        throw Error("area and determinant routes disagree on " + a.str() + " vs " + b.str());
    return via_area;
}

namespace {

bool multiset_includes(const std::vector<OrbitUnit>& big, const std::vector<OrbitUnit>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end(), UnitLess{});
}

std::vector<OrbitUnit> multiset_diff(const std::vector<OrbitUnit>& big,
                                     const std::vector<OrbitUnit>& small) {
    std::vector<OrbitUnit> out;
    std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                        std::back_inserter(out), UnitLess{});
    return out;
}

// fill strictly left of corner between the shared endpoints, no lattice
// points in the open region between
bool paths_round(const ConvexPath& fill, const ConvexPath& corner) {
    if (fill.total() != corner.total()) return false;
    long long h = corner.height();
    for (long long q = 1; q < h; ++q)
        if (!(fill.p_at(q) < corner.p_at(q))) return false;
    return lattice_points_strictly_between(corner, fill).empty();
}

}  // namespace

std::vector<RoundingWitness> rounding_witnesses(const OrbitSet& a, const OrbitSet& b) {
    if (a.total() != b.total()) throw TotalMismatch(a.str() + " vs " + b.str());
    std::vector<RoundingWitness> out;
    const auto ua = a.units();
    const auto ub = b.units();
    if (ua.size() + 1 < ub.size()) return out;
    for (size_t i = 0; i < ub.size(); ++i) {
        for (size_t j = i + 1; j < ub.size(); ++j) {
            std::vector<OrbitUnit> corner = {ub[i], ub[j]};
            std::vector<OrbitUnit> gamma;
            for (size_t t = 0; t < ub.size(); ++t)
                if (t != i && t != j) gamma.push_back(ub[t]);
            if (!multiset_includes(ua, gamma)) continue;
            std::vector<OrbitUnit> fill = multiset_diff(ua, gamma);
            if (fill.empty()) continue;
            long long hc = hyp_count(corner), hf = hyp_count(fill);
            if (!((hc == 1 && hf == 0) || (hc == 2 && hf == 1))) continue;
            Frac smax = slope_of(corner[0].v), smin = slope_of(corner[1].v);
            bool ok = true;
            for (const auto& u : gamma) {
                Frac s = slope_of(u.v);
                if (s > smin && s < smax) { ok = false; break; }
            }
            if (!ok) continue;
            for (const auto& u : fill) {
                Frac s = slope_of(u.v);
                if (s < smin || s > smax) { ok = false; break; }
            }
            if (!ok) continue;
            OrbitSet corner_set = orbit_set_from_units(corner);
            OrbitSet fill_set = orbit_set_from_units(fill);
            if (!paths_round(fill_set.path(), corner_set.path())) continue;
            RoundingWitness w{corner_set, fill_set};
            if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
        }
    }
    return out;
}

bool is_rounding(const OrbitSet& a, const OrbitSet& b) {
    return !rounding_witnesses(a, b).empty();
}

bool is_double_rounding(const OrbitSet& a, const OrbitSet& b) {
    if (a.total() != b.total()) throw TotalMismatch(a.str() + " vs " + b.str());
    const auto ua = a.units();
    const auto ub = b.units();
    if (ub.size() < 3) return false;
    for (size_t i = 0; i < ub.size(); ++i)
        for (size_t j = i + 1; j < ub.size(); ++j)
            for (size_t k = j + 1; k < ub.size(); ++k) {
                std::vector<OrbitUnit> corner = {ub[i], ub[j], ub[k]};
                if (hyp_count(corner) != 3) continue;
                std::vector<OrbitUnit> gamma;
                for (size_t t = 0; t < ub.size(); ++t)
                    if (t != i && t != j && t != k) gamma.push_back(ub[t]);
                if (!multiset_includes(ua, gamma)) continue;
                std::vector<OrbitUnit> fill = multiset_diff(ua, gamma);
                if (fill.empty() || hyp_count(fill) != 0) continue;
                Frac smax = slope_of(corner[0].v), smin = slope_of(corner[2].v);
                bool ok = true;
                for (const auto& u : gamma) {
                    Frac s = slope_of(u.v);
                    if (s > smin && s < smax) { ok = false; break; }
                }
                if (!ok) continue;
                for (const auto& u : fill) {
                    Frac s = slope_of(u.v);
                    if (s < smin || s > smax) { ok = false; break; }
                }
                if (!ok) continue;
                if (paths_round(orbit_set_from_units(fill).path(),
                                orbit_set_from_units(corner).path()))
                    return true;
            }
    return false;
}

namespace {

int thread_count(size_t work) {
    if (work < 256) return 1;
    if (const char* env = std::getenv("PFH_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1 && k <= 64) return k;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)std::min(hw, 8u) : 1;
}

long long common_unit_count(const std::vector<OrbitUnit>& x, const std::vector<OrbitUnit>& y) {
    long long c = 0;
    size_t i = 0, j = 0;
    UnitLess lt;
    while (i < x.size() && j < y.size()) {
        if (lt(x[i], y[j])) ++i;
        else if (lt(y[j], x[i])) ++j;
        else { ++c; ++i; ++j; }
    }
    return c;
}

}  // namespace

CylinderComplex cylinder_complex(const Window& w, long long P, long long Q) {
    CylinderComplex c;
    c.w = w;
    c.P = P;
    c.Q = Q;
    c.gens = enumerate_generators(w, P, Q);
    std::sort(c.gens.begin(), c.gens.end());
    size_t n = c.gens.size();
    c.cx.mod2 = false;
    c.cx.grade.assign(n, 0);
    c.cx.d.assign(n, {});
    if (n == 0) return c;

    OrbitSet ref = e_generator(w, P, Q);
    for (size_t i = 0; i < n; ++i) c.cx.grade[i] = relative_index(c.gens[i], ref);

    std::map<long long, std::vector<int>> bucket;
    for (size_t i = 0; i < n; ++i) bucket[c.cx.grade[i]].push_back((int)i);
    std::vector<std::vector<OrbitUnit>> units(n);
    for (size_t i = 0; i < n; ++i) units[i] = c.gens[i].units();

    int threads = thread_count(n);
    std::vector<std::vector<std::pair<int, int>>> audits(threads);
    auto work = [&](int tid) {
        for (size_t j = tid; j < n; j += threads) {
            auto it = bucket.find(c.cx.grade[j] - 1);
            if (it == bucket.end()) continue;
            for (int i : it->second) {
                if (units[j].size() + 1 < units[i].size()) continue;
                if (common_unit_count(units[j], units[i]) + 2 < (long long)units[i].size()) continue;
                auto ws = rounding_witnesses(c.gens[j], c.gens[i]);
                if (!ws.empty()) c.cx.d[j].push_back(i);
                if (ws.size() >= 2) audits[tid].push_back({(int)j, i});
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (auto& a : audits) c.audit.insert(c.audit.end(), a.begin(), a.end());
    std::sort(c.audit.begin(), c.audit.end());
    return c;
}

int CylinderComplex::gen_index(const OrbitSet& g) const {
    auto it = std::lower_bound(gens.begin(), gens.end(), g);
    if (it == gens.end() || !(*it == g)) return -1;
    return (int)(it - gens.begin());
}

HomologyCheck check_cylinder_homology(const CylinderComplex& c) {
    HomologyCheck out;
    if (c.gens.empty()) {
        out.detail = "no generators";
        return out;
    }
    if (!c.audit.empty()) {
        out.detail = "rounding pair with several witnesses";
        return out;
    }
    out.dims = c.cx.homology_dims();
    std::map<long long, long long> expected = {{0, 1}, {1, 1}};
    if (out.dims != expected) {
        out.detail = "unexpected homology dimensions";
        return out;
    }
    OrbitSet ref = e_generator(c.w, c.P, c.Q);
    size_t n = c.gens.size();
    F2Span im0, im1;
    for (size_t j = 0; j < n; ++j) {
        if (c.cx.grade[j] == 1) im0.add(c.cx.column(j));
        if (c.cx.grade[j] == 2) im1.add(c.cx.column(j));
    }
    BitVec e_cycle(n);
    e_cycle.flip(c.gen_index(ref));
    if (c.cx.apply_d(e_cycle).any() || im0.contains(e_cycle)) {
        out.detail = "maximal path does not span degree zero";
        return out;
    }
    for (const OrbitSet& v : h_variants(ref)) {
        int idx = c.gen_index(v);
        if (idx < 0) {
            out.detail = "missing hyperbolic variant " + v.str();
            return out;
        }
        BitVec h_cycle(n);
        h_cycle.flip(idx);
        if (c.cx.apply_d(h_cycle).any() || im1.contains(h_cycle)) {
            out.detail = "variant " + v.str() + " does not span degree one";
            return out;
        }
    }
    out.ok = true;
    return out;
}

std::vector<long long> top_slope_levels(const CylinderComplex& c) {
    OrbitSet ref = e_generator(c.w, c.P, c.Q);
    Frac top = slope_of(ref.factors.front().v);
    std::vector<long long> level(c.gens.size(), 0);
    for (size_t i = 0; i < c.gens.size(); ++i) {
        long long m = 0;
        for (const auto& f : c.gens[i].factors)
            if (slope_of(f.v) == top) m += f.mult;
        level[i] = -m;
    }
    return level;
}

std::vector<PageDims> top_slope_pages(const CylinderComplex& c, int pages) {
    return spectral_pages(c.cx, top_slope_levels(c), pages);
}

bool shear_equivariance_check(const Window& w, long long P, long long Q, const Mat2& A) {
    CylinderComplex c = cylinder_complex(w, P, Q);
    Window wa{sl2_apply(A, w.x1), sl2_apply(A, w.x2)};
    Vec2 ta = sl2_apply(A, Vec2{P, Q});
    CylinderComplex ca = cylinder_complex(wa, ta.p, ta.q);
    size_t n = c.gens.size();
    if (ca.gens.size() != n) return false;
    std::vector<int> to(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<OrbitFactor> fs;
        for (const auto& f : c.gens[i].factors) fs.push_back({sl2_apply(A, f.v), f.type, f.mult});
        int idx = ca.gen_index(OrbitSet::of(fs));
        if (idx < 0) return false;
        to[i] = idx;
    }
    for (size_t i = 0; i < n; ++i) {
        if (ca.cx.grade[to[i]] != c.cx.grade[i]) return false;
        std::vector<int> mapped;
        for (int t : c.cx.d[i]) mapped.push_back(to[t]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != ca.cx.d[to[i]]) return false;
    }
    return true;
}

CornerCheck corner_pair_check(const Vec2& lo, const Vec2& hi) {
    CornerCheck out;
    if (!is_primitive(lo) || !is_primitive(hi) || det2(hi, lo) < 1) {
        out.detail = "not an ordered primitive pair";
        return out;
    }
    long long P = lo.p + hi.p, Q = lo.q + hi.q;
    Window outer{Bound(slope_of(lo), -1), Bound(slope_of(hi), 1)};
    CylinderComplex c = cylinder_complex(outer, P, Q);
    Window inner{Bound(slope_of(lo), 1), Bound(slope_of(hi), -1)};
    OrbitSet e_in = e_generator(inner, P, Q);

    auto sources_of = [&](const OrbitSet& target) {
        std::vector<int> srcs;
        int ti = c.gen_index(target);
        if (ti < 0) return srcs;
        for (size_t j = 0; j < c.gens.size(); ++j)
            if (std::binary_search(c.cx.d[j].begin(), c.cx.d[j].end(), ti)) srcs.push_back((int)j);
        return srcs;
    };
    auto corner_class = [&](OrbitType thi, OrbitType tlo) {
        return OrbitSet::of({{hi, thi, 1}, {lo, tlo, 1}});
    };

    std::string tag = "(" + slope_of(lo).str() + "," + slope_of(hi).str() + ")";
    for (auto [thi, tlo] : {std::pair(OrbitType::Elliptic, OrbitType::Hyperbolic),
                            std::pair(OrbitType::Hyperbolic, OrbitType::Elliptic)}) {
        std::vector<int> srcs = sources_of(corner_class(thi, tlo));
        if (srcs.size() != 1 || !(c.gens[srcs[0]] == e_in)) {
            out.detail = tag + ": single-hyperbolic corner class not hit by the maximal path alone";
            return out;
        }
    }
    std::vector<int> expect;
    for (const OrbitSet& v : h_variants(e_in)) expect.push_back(c.gen_index(v));
    std::sort(expect.begin(), expect.end());
    std::vector<int> srcs = sources_of(corner_class(OrbitType::Hyperbolic, OrbitType::Hyperbolic));
    if (srcs != expect) {
        out.detail = tag + ": double-hyperbolic corner class not hit by the variant sum";
        return out;
    }
    out.ok = true;
    out.windows = 1;
    return out;
}

CornerCheck corner_pair_sweep(long long max_total_den, long long max_det) {
    // slopes a/b in [0,1) up to shearing; bc - ad caps the slope gap
    CornerCheck out;
    for (long long b = 1; b < max_total_den; ++b) {
        for (long long a = 0; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            for (long long d = 1; b + d <= max_total_den; ++d) {
                for (long long det = 1; det <= max_det; ++det) {
                    if ((det + a * d) % b != 0) continue;
                    long long cnum = (det + a * d) / b;
                    if (std::gcd(cnum, d) != 1) continue;
                    CornerCheck one = corner_pair_check({a, b}, {cnum, d});
                    if (!one.ok) return one;
                    ++out.windows;
                }
            }
        }
    }
    out.ok = true;
    return out;
}

}  // namespace pfh
