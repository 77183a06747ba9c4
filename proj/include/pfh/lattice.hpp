#pragma once

#include <utility>
#include <vector>

#include "pfh/rational.hpp"

namespace pfh {

// Lattice vector (p,q). Orbit vectors always have q >= 1; slope means p/q.
struct Vec2 {
    long long p = 0;
    long long q = 0;

    bool operator==(const Vec2& o) const { return p == o.p && q == o.q; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool operator<(const Vec2& o) const {
        return q < o.q || (q == o.q && p < o.p);
    }
};

inline long long det2(const Vec2& u, const Vec2& v) { return u.p * v.q - v.p * u.q; }

bool is_primitive(const Vec2& v);      // q >= 1 and gcd(|p|,q) == 1
Frac slope_of(const Vec2& v);          // p/q

// Edge of a convex path: primitive direction, multiplicity >= 1.
struct PathEdge {
    Vec2 v;
    long long mult = 1;
    bool operator==(const PathEdge& o) const { return v == o.v && mult == o.mult; }
};

// Left-turning convex lattice path starting at (0,0): edges sorted by strictly
// decreasing slope. Every edge climbs (q >= 1 per step), so the path is the
// graph of a concave function p(q) on [0, height].
struct ConvexPath {
    std::vector<PathEdge> edges;

    std::vector<Vec2> vertices() const;  // corner list, starts at (0,0)
    Vec2 total() const;
    long long height() const { return total().q; }
    Frac p_at(long long q) const;        // exact p-coordinate at height q

    bool operator==(const ConvexPath& o) const { return edges == o.edges; }
};

// Merge a factor multiset into the canonical path: equal slopes coalesce.
ConvexPath path_of(const std::vector<std::pair<Vec2, long long>>& factors);

// integral of p dq along the path; always a half-integer
Frac area_pdq(const ConvexPath& path);

std::vector<Vec2> lattice_points_on(const ConvexPath& path);

// Lattice points interior to the region bounded by two paths with common
// endpoints; points lying on either path are excluded.
std::vector<Vec2> lattice_points_strictly_between(const ConvexPath& left,
                                                  const ConvexPath& right);

// true iff a has strictly larger p than b at some common height
bool crosses_right(const ConvexPath& a, const ConvexPath& b);

// All reduced p/q with q <= max_den and x1 < p/q < x2, slope-ascending.
std::vector<Vec2> farey_in_interval(const Bound& x1, const Bound& x2, long long max_den);

// Lattice points of the parallelogram spanned by the window directions with
// opposite corners (0,0) and (P,Q), via the bound inequalities
//   0 <= p - q*x1 <= P - Q*x1   and   0 <= q*x2 - p <= Q*x2 - P.
std::vector<Vec2> parallelogram_points(const Bound& x1, const Bound& x2,
                                       long long P, long long Q);

// Maximal-p chain of the hull of parallelogram_points: the distinguished
// all-elliptic path of the window.
ConvexPath e_path(const Bound& x1, const Bound& x2, long long P, long long Q);

struct Mat2 {
    long long a = 1, b = 0, c = 0, d = 1;  // [[a,b],[c,d]], det 1
    long long det() const { return a * d - b * c; }
};

Vec2 sl2_apply(const Mat2& A, const Vec2& v);
Frac sl2_apply(const Mat2& A, const Frac& x);    // Moebius (a x + b)/(c x + d)
Bound sl2_apply(const Mat2& A, const Bound& x);  // shift transforms by derivative sign

}  // namespace pfh
