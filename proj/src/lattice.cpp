#include "pfh/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace pfh {

bool is_primitive(const Vec2& v) {
    if (v.q < 1) return false;
    return std::gcd(std::abs(v.p), v.q) == 1;
}

Frac slope_of(const Vec2& v) { return Frac(v.p, v.q); }

std::vector<Vec2> ConvexPath::vertices() const {
    std::vector<Vec2> out;
    Vec2 at{0, 0};
    out.push_back(at);
    for (const auto& e : edges) {
        at.p += e.v.p * e.mult;
        at.q += e.v.q * e.mult;
        out.push_back(at);
    }
    return out;
}

Vec2 ConvexPath::total() const {
    Vec2 t{0, 0};
    for (const auto& e : edges) {
        t.p += e.v.p * e.mult;
        t.q += e.v.q * e.mult;
    }
    return t;
}

Frac ConvexPath::p_at(long long q) const {
    if (q < 0 || q > height()) throw Error("p_at: height out of range");
    Vec2 at{0, 0};
    for (const auto& e : edges) {
        long long step = e.v.q * e.mult;
        if (q <= at.q + step) {
            // interpolate within this edge
            return Frac(at.p) + Frac(e.v.p * (q - at.q), e.v.q);
        }
        at.p += e.v.p * e.mult;
        at.q += step;
    }
    return Frac(at.p);
}

ConvexPath path_of(const std::vector<std::pair<Vec2, long long>>& factors) {
    for (const auto& [v, m] : factors) {
        if (!is_primitive(v)) throw NonPrimitiveVector("path_of: (" + std::to_string(v.p) + "," + std::to_string(v.q) + ")");
        if (m < 1) throw Error("path_of: multiplicity < 1");
    }
    std::vector<std::pair<Vec2, long long>> fs = factors;
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
        return slope_of(a.first) > slope_of(b.first);
    });
    ConvexPath path;
    for (const auto& [v, m] : fs) {
        if (!path.edges.empty() && path.edges.back().v == v)
            path.edges.back().mult += m;
        else
            path.edges.push_back({v, m});
    }
    return path;
}

Frac area_pdq(const ConvexPath& path) {
    Frac area;
    Vec2 at{0, 0};
    for (const auto& e : path.edges) {
        long long a = e.v.p * e.mult;
        long long b = e.v.q * e.mult;
        area = area + Frac(b) * (Frac(at.p) + Frac(a, 2));
        at.p += a;
        at.q += b;
    }
    return area;
}

std::vector<Vec2> lattice_points_on(const ConvexPath& path) {
    std::vector<Vec2> out;
    for (long long q = 0; q <= path.height(); ++q) {
        Frac p = path.p_at(q);
        if (p.is_integer()) out.push_back({p.p, q});
    }
    return out;
}

std::vector<Vec2> lattice_points_strictly_between(const ConvexPath& left,
                                                  const ConvexPath& right) {
    if (left.total() != right.total())
        throw EndpointMismatch("lattice_points_strictly_between");
    std::vector<Vec2> out;
    for (long long q = 1; q < left.height(); ++q) {
        Frac pl = left.p_at(q);
        Frac pr = right.p_at(q);
        Frac lo = std::min(pl, pr);
        Frac hi = std::max(pl, pr);
        for (long long p = lo.floor(); p <= hi.ceil(); ++p)
            if (Frac(p) > lo && Frac(p) < hi) out.push_back({p, q});
    }
    return out;
}

bool crosses_right(const ConvexPath& a, const ConvexPath& b) {
    if (a.total() != b.total()) throw EndpointMismatch("crosses_right");
    for (long long q = 0; q <= a.height(); ++q)
        if (a.p_at(q) > b.p_at(q)) return true;
    return false;
}

std::vector<Vec2> farey_in_interval(const Bound& x1, const Bound& x2, long long max_den) {
    if (x1.eps == 0 && x1.value.q <= max_den)
        throw EndpointCollision("left endpoint " + x1.str());
    if (x2.eps == 0 && x2.value.q <= max_den)
        throw EndpointCollision("right endpoint " + x2.str());
    std::vector<Vec2> out;
    for (long long q = 1; q <= max_den; ++q) {
        long long lo = x1.scaled(q).floor() - 1;
        long long hi = x2.scaled(q).ceil() + 1;
        for (long long p = lo; p <= hi; ++p) {
            if (std::gcd(std::abs(p), q) != 1) continue;
            if (Frac(p, q) > x1 && Frac(p, q) < x2) out.push_back({p, q});
        }
    }
    std::sort(out.begin(), out.end(), [](const Vec2& u, const Vec2& v) {
        return slope_of(u) < slope_of(v);
    });
    return out;
}

std::vector<Vec2> parallelogram_points(const Bound& x1, const Bound& x2,
                                       long long P, long long Q) {
    std::vector<Vec2> out;
    for (long long q = 0; q <= Q; ++q) {
        // 0 <= p - q*x1 <= P - Q*x1  and  0 <= q*x2 - p <= Q*x2 - P
        Bound lo1 = x1.scaled(q);
        Bound lo2 = x2.scaled(q - Q) + Frac(P);
        Bound hi1 = x2.scaled(q);
        Bound hi2 = x1.scaled(q - Q) + Frac(P);
        long long plo = std::max(lo1.ceil(), lo2.ceil());
        long long phi = std::min(hi1.floor(), hi2.floor());
        for (long long p = plo; p <= phi; ++p) out.push_back({p, q});
    }
    return out;
}

namespace {
long long turn(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.q - o.q) * (b.p - o.p) - (a.p - o.p) * (b.q - o.q);
}
}  // namespace

ConvexPath e_path(const Bound& x1, const Bound& x2, long long P, long long Q) {
    if (Q < 1) throw Error("e_path: Q < 1");
    Frac pq(P, Q);
    if (!(pq > x1 && pq < x2)) throw SlopeOutsideInterval(pq.str() + " vs (" + x1.str() + "," + x2.str() + ")");

    std::vector<Vec2> pts = parallelogram_points(x1, x2, P, Q);
    std::sort(pts.begin(), pts.end());
    std::vector<Vec2> chain;
    for (const Vec2& pt : pts) {
        while (chain.size() >= 2 && turn(chain[chain.size() - 2], chain.back(), pt) >= 0)
            chain.pop_back();
        chain.push_back(pt);
    }

    ConvexPath path;
    for (size_t i = 1; i < chain.size(); ++i) {
        long long dp = chain[i].p - chain[i - 1].p;
        long long dq = chain[i].q - chain[i - 1].q;
        long long g = std::gcd(std::abs(dp), dq);
        path.edges.push_back({{dp / g, dq / g}, g});
    }
    for (const auto& e : path.edges) {
        Frac s = slope_of(e.v);
        if (!(s > x1 && s < x2))
            throw EndpointCollision("hull edge slope " + s.str() + " meets window edge");
    }
    for (size_t i = 1; i < path.edges.size(); ++i)
        if (!(slope_of(path.edges[i].v) < slope_of(path.edges[i - 1].v)))
            throw Error("e_path: hull not strictly convex");
    return path;
}

Vec2 sl2_apply(const Mat2& A, const Vec2& v) {
    if (A.det() != 1) throw Error("sl2_apply: det != 1");
    return {A.a * v.p + A.b * v.q, A.c * v.p + A.d * v.q};
}

Frac sl2_apply(const Mat2& A, const Frac& x) {
    if (A.det() != 1) throw Error("sl2_apply: det != 1");
    Frac den = Frac(A.c) * x + Frac(A.d);
    if (!(den > Frac(0))) throw OutsideDomain("c*x+d = " + den.str());
    return (Frac(A.a) * x + Frac(A.b)) / den;
}

Bound sl2_apply(const Mat2& A, const Bound& x) {
    if (A.det() != 1) throw Error("sl2_apply: det != 1");
    Frac den = Frac(A.c) * x.value + Frac(A.d);
    if (!(den > Frac(0))) throw OutsideDomain("c*x+d = " + den.str());
    Frac v = (Frac(A.a) * x.value + Frac(A.b)) / den;
    long long e = x.eps > 0 ? 1 : (x.eps < 0 ? -1 : 0);
    return Bound{v, e};  // derivative 1/(c x + d)^2 > 0 keeps the shift's sign
}

}  // namespace pfh
