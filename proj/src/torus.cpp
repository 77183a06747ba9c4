#include "pfh/torus.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pfh {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

// one copy of a torus letter: a fiber letter e/h or an interior orbit
struct TorusUnit {
    bool fiber = false;
    OrbitType type = OrbitType::Elliptic;
    Vec2 v{0, 1};  // interior only

    bool operator==(const TorusUnit& o) const = default;
};

bool tunit_before(const TorusUnit& a, const TorusUnit& b) {
    if (a.fiber != b.fiber) return a.fiber;
    if (a.fiber) return a.type == OrbitType::Elliptic && b.type == OrbitType::Hyperbolic;
    return unit_before(OrbitUnit{a.v, a.type}, OrbitUnit{b.v, b.type});
}

std::vector<TorusUnit> units_of(const TorusOrbitSet& g) {
    std::vector<TorusUnit> out;
    for (long long k = 0; k < g.e_exp; ++k) out.push_back({true, OrbitType::Elliptic, Vec2(0, 1)});
    for (long long k = 0; k < g.h_exp; ++k) out.push_back({true, OrbitType::Hyperbolic, Vec2(0, 1)});
    for (const OrbitUnit& u : g.interior.units()) out.push_back({false, u.type, u.v});
    std::sort(out.begin(), out.end(), tunit_before);
    return out;
}

// all distinct cylinder orbit sets obtained by assigning each unit a slope:
// fiber letters to 0 or n (widen also 2n), interior copies kept or moved up
// one period when widening
std::vector<OrbitSet> lifts_of_units(const std::vector<TorusUnit>& us, long long n, int widen) {
    std::vector<OrbitSet> out;
    std::vector<OrbitUnit> picked;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == us.size()) {
            out.push_back(orbit_set_from_units(picked));
            return;
        }
        std::vector<Vec2> choices;
        if (us[i].fiber) {
            choices = {Vec2(0, 1), Vec2(n, 1)};
            if (widen > 0) choices.push_back(Vec2(2 * n, 1));
        } else {
            choices = {us[i].v};
            if (widen > 0) choices.push_back(Vec2(us[i].v.p + n * us[i].v.q, us[i].v.q));
        }
        for (const Vec2& v : choices) {
            picked.push_back(OrbitUnit{v, us[i].type});
            self(self, i + 1);
            picked.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long long residue(long long a, long long n) { return ((a % n) + n) % n; }

}  // namespace

TorusOrbitSet TorusOrbitSet::of(long long e, long long h, OrbitSet in, long long n) {
    if (e < 0 || h < 0 || h > 1) throw Error("torus orbit set: bad fiber exponents");
    for (const OrbitFactor& f : in.factors)
        if (f.v.p <= 0 || f.v.p >= n * f.v.q)
            throw SlopeOutsideInterval("torus orbit set: slope " + slope_of(f.v).str() +
                                       " not strictly between 0 and " + std::to_string(n));
    TorusOrbitSet g;
    g.e_exp = e;
    g.h_exp = h;
    g.interior = std::move(in);
    return g;
}

long long TorusOrbitSet::degree() const { return e_exp + h_exp + interior.total().q; }

long long TorusOrbitSet::numerator() const { return interior.total().p; }

std::string TorusOrbitSet::str() const {
    std::string s;
    auto put = [&](const std::string& piece) {
        if (!s.empty()) s += ' ';
        s += piece;
    };
    if (e_exp == 1) put("e");
    if (e_exp > 1) put("e^" + std::to_string(e_exp));
    if (h_exp == 1) put("h");
    if (!interior.factors.empty()) put(interior.str());
    return s.empty() ? "1" : s;
}

bool TorusOrbitSet::operator<(const TorusOrbitSet& o) const {
    if (e_exp != o.e_exp) return e_exp > o.e_exp;
    if (h_exp != o.h_exp) return h_exp < o.h_exp;
    return interior < o.interior;
}

long long wrap_correction(const OrbitSet& lifted, long long n) {
    long long out = 0;
    for (const OrbitFactor& f : lifted.factors) {
        long long nq = n * f.v.q;
        long long w = floor_div(f.v.p, nq);
        out += f.mult * (-f.v.p * w + nq * w * (w + 1) / 2);
    }
    return out;
}

std::vector<TorusOrbitSet> enumerate_torus(long long n, long long d, long long sector) {
    if (n < 1 || d < 1 || sector < 0 || sector >= n)
        throw OutsideDomain("torus generators: need n >= 1, d >= 1, 0 <= sector < n");
    std::vector<TorusOrbitSet> out;
    Window inner{Bound(Frac(0), 1), Bound(Frac(n), -1)};
    for (long long e = d; e >= 0; --e)
        for (long long h = 0; h <= 1 && e + h <= d; ++h) {
            long long qi = d - e - h;
            if (qi == 0) {
                if (sector == 0) out.push_back(TorusOrbitSet::of(e, h, OrbitSet::of({}), n));
                continue;
            }
            for (long long p = 1; p < n * qi; ++p) {
                if (residue(p - sector, n) != 0) continue;
                for (OrbitSet& in : enumerate_generators(inner, p, qi))
                    out.push_back(TorusOrbitSet::of(e, h, std::move(in), n));
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<OrbitSet> lift_configs(const TorusOrbitSet& g, long long n, int widen) {
    return lifts_of_units(units_of(g), n, widen);
}

long long sector_grading(const TorusOrbitSet& a, const TorusOrbitSet& b, long long n) {
    if (a.degree() != b.degree())
        throw TotalMismatch("grading compares " + a.str() + " and " + b.str());
    if (residue(a.numerator() - b.numerator(), n) != 0)
        throw TotalMismatch("grading needs one sector, got " + a.str() + " and " + b.str());
    long long d = a.degree();
    for (int widen = 0; widen <= 1; ++widen) {
        bool have = false;
        long long val = 0;
        for (const OrbitSet& la : lift_configs(a, n, widen))
            for (const OrbitSet& lb : lift_configs(b, n, widen)) {
                if (!(la.total() == lb.total())) continue;
                long long got = relative_index(la, lb) -
                                2 * d * (wrap_correction(la, n) - wrap_correction(lb, n));
                if (have && got != val)
                    throw Error("grading of " + a.str() + " vs " + b.str() +
                                " depends on the lift");
                val = got;
                have = true;
            }
        if (have) return val;
    }
    throw NoCommonLiftTotal(a.str() + " vs " + b.str());
}

long long lift_rounding_count(const TorusOrbitSet& a, const TorusOrbitSet& b, long long n) {
    if (a.degree() != b.degree()) return 0;
    if (residue(a.numerator() - b.numerator(), n) != 0) return 0;
    std::vector<TorusUnit> ua = units_of(a), ub = units_of(b);
    long long count = 0;
    for (size_t i = 0; i < ub.size(); ++i) {
        if (i > 0 && ub[i] == ub[i - 1]) continue;
        for (size_t j = i + 1; j < ub.size(); ++j) {
            if (j > i + 1 && ub[j] == ub[j - 1]) continue;
            std::vector<TorusUnit> corner{ub[i], ub[j]};
            std::vector<TorusUnit> carried;
            for (size_t k = 0; k < ub.size(); ++k)
                if (k != i && k != j) carried.push_back(ub[k]);
            if (!std::includes(ua.begin(), ua.end(), carried.begin(), carried.end(), tunit_before))
                continue;
            std::vector<TorusUnit> fill;
            std::set_difference(ua.begin(), ua.end(), carried.begin(), carried.end(),
                                std::back_inserter(fill), tunit_before);
            if (fill.empty()) continue;
            for (const OrbitSet& la : lifts_of_units(fill, n, 0))
                for (const OrbitSet& lb : lifts_of_units(corner, n, 0)) {
                    if (!(la.total() == lb.total())) continue;
                    // carried factors must clear the corner span, as in the
                    // cylinder predicate; fiber letters sit at 0 or n and
                    // always do
                    auto cs = lb.units();
                    Frac smax = slope_of(cs[0].v), smin = slope_of(cs[1].v);
                    bool clear = true;
                    for (const TorusUnit& u : carried) {
                        if (u.fiber) continue;
                        Frac s = slope_of(u.v);
                        if (s > smin && s < smax) {
                            clear = false;
                            break;
                        }
                    }
                    if (clear && is_rounding(la, lb)) ++count;
                }
        }
    }
    return count;
}

int TorusComplex::gen_index(const TorusOrbitSet& g) const {
    auto it = std::lower_bound(gens.begin(), gens.end(), g);
    if (it == gens.end() || !(*it == g)) return -1;
    return (int)(it - gens.begin());
}

TorusComplex torus_complex(const TorusSector& s) {
    TorusComplex c;
    c.s = s;
    c.gens = enumerate_torus(s.n, s.d, s.sector);
    size_t m = c.gens.size();
    c.cx.mod2 = false;
    c.cx.grade.assign(m, 0);
    c.cx.d.assign(m, {});
    if (m == 0) return c;
    for (size_t i = 0; i < m; ++i) c.cx.grade[i] = sector_grading(c.gens[i], c.gens[0], s.n);
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < m; ++i)
            if (lift_rounding_count(c.gens[j], c.gens[i], s.n) % 2 == 1)
                c.cx.d[j].push_back((int)i);
    c.cx.validate();
    c.cx.assert_d_squared_zero();
    return c;
}

TorusHomologyCheck torus_homology_check(const TorusComplex& c) {
    TorusHomologyCheck out;
    for (const auto& [g, dim] : c.cx.homology_dims())
        if (dim != 0) out.dims[g] = dim;
    if (c.s.sector != 0) {
        out.ok = true;
        out.detail = "no expectation away from the zero sector";
        return out;
    }
    out.expectation_applied = true;
    std::map<long long, long long> want;
    for (long long g = 0; g < 2 * c.s.d; ++g) want[g] = 1;
    if (out.dims != want) {
        out.detail = "homology is not one line per grade 0.." + std::to_string(2 * c.s.d - 1);
        return out;
    }
    out.ok = true;
    return out;
}

std::vector<long long> eh_exponent_levels(const TorusComplex& c) {
    std::vector<long long> out(c.gens.size(), 0);
    for (size_t i = 0; i < c.gens.size(); ++i) out[i] = c.s.d - c.gens[i].boundary_exp();
    return out;
}

std::vector<PageDims> eh_exponent_pages(const TorusComplex& c, int pages) {
    return spectral_pages(c.cx, eh_exponent_levels(c), pages);
}

TorusOrbitSet project_to_torus(const OrbitSet& a, long long n) {
    long long e = 0, h = 0;
    std::vector<OrbitUnit> in;
    for (const OrbitUnit& u : a.units()) {
        long long nq = n * u.v.q;
        long long p = u.v.p - nq * floor_div(u.v.p, nq);
        if (u.v.q == 1 && p == 0) {
            (u.type == OrbitType::Elliptic ? e : h) += 1;
        } else {
            in.push_back(OrbitUnit{Vec2(p, u.v.q), u.type});
        }
    }
    if (h > 1) throw Error("projection collides hyperbolic fiber orbits");
    return TorusOrbitSet::of(e, h, orbit_set_from_units(in), n);
}

WrappingCheck wrapping_check(long long n, long long d) {
    if (n < 1 || d < 1) throw OutsideDomain("wrapping check: need n >= 1, d >= 1");
    WrappingCheck out;
    Window w{Bound(Frac(-1), -1), Bound(Frac(1), 1)};
    CylinderComplex up = cylinder_complex(w, 0, d);
    int src = up.gen_index(OrbitSet::of({OrbitFactor{Vec2(0, 1), OrbitType::Elliptic, d}}));
    if (src < 0) {
        out.detail = "vertical source generator missing";
        return out;
    }
    for (int t : up.cx.d[src]) out.lifted_terms.push_back(up.gens[t]);

    std::vector<OrbitSet> want;
    for (long long k = 1; k < d; ++k) {
        want.push_back(orbit_set_from_units({OrbitUnit{Vec2(1, d - k), OrbitType::Hyperbolic},
                                             OrbitUnit{Vec2(-1, k), OrbitType::Elliptic}}));
        want.push_back(orbit_set_from_units({OrbitUnit{Vec2(1, d - k), OrbitType::Elliptic},
                                             OrbitUnit{Vec2(-1, k), OrbitType::Hyperbolic}}));
    }
    std::sort(want.begin(), want.end());
    if (out.lifted_terms != want) {
        out.detail = "wrapped differential does not match the corner sum";
        return out;
    }

    std::map<TorusOrbitSet, int> parity;
    for (const OrbitSet& t : out.lifted_terms) {
        if (wrap_correction(t, n) != -1) continue;
        parity[project_to_torus(t, n)] ^= 1;
    }
    for (const auto& [g, odd] : parity)
        if (odd) out.projected_terms.push_back(g);

    if (d == 1) {
        out.ok = out.lifted_terms.empty();
        out.detail = out.ok ? "empty correction" : "unexpected degree-one correction";
        return out;
    }

    TorusComplex tc = torus_complex({n, d, 0});
    size_t m = tc.gens.size();
    BitVec v(m);
    for (const TorusOrbitSet& g : out.projected_terms) {
        int idx = tc.gen_index(g);
        if (idx < 0) {
            out.detail = "projected term " + g.str() + " is not a sector generator";
            return out;
        }
        if (tc.cx.grade[idx] != 2 * d - 1) {
            out.detail = "projected term " + g.str() + " lands off the top homology grade";
            return out;
        }
        v.flip(idx);
    }

    F2Span reach;
    for (size_t j = 0; j < m; ++j) {
        if (tc.cx.grade[j] == 2 * d) reach.add(tc.cx.column(j));
        if (tc.cx.grade[j] == 2 * d - 1 && tc.gens[j].boundary_exp() >= 1) {
            BitVec one(m);
            one.flip(j);
            reach.add(one);
        }
    }
    if (v.any() && !reach.contains(v)) {
        out.detail = "correction escapes the fiber-letter span up to boundaries";
        return out;
    }

    std::vector<int> to(m, -1);
    std::vector<size_t> keep;
    for (size_t j = 0; j < m; ++j)
        if (tc.gens[j].boundary_exp() >= 1) {
            to[j] = (int)keep.size();
            keep.push_back(j);
        }
    ChainComplexF2 sub;
    sub.mod2 = false;
    for (size_t idx : keep) {
        sub.grade.push_back(tc.cx.grade[idx]);
        sub.d.push_back({});
    }
    for (size_t a = 0; a < keep.size(); ++a)
        for (int t : tc.cx.d[keep[a]]) {
            if (to[t] < 0) {
                out.detail = "fiber-letter span is not closed under the differential";
                return out;
            }
            sub.d[a].push_back(to[t]);
        }
    auto dims = sub.homology_dims();
    if (dims.count(2 * d - 1) && dims.at(2 * d - 1) != 0) {
        out.detail = "fiber-letter subcomplex carries a top-grade class";
        return out;
    }
    out.ok = true;
    out.detail = "correction absorbed below the top filtration level";
    return out;
}

}  // namespace pfh
