#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfh/f2.hpp"
#include "pfh/lattice.hpp"

namespace pfh {

enum class OrbitType { Elliptic, Hyperbolic };

struct OrbitFactor {
    Vec2 v;
    OrbitType type = OrbitType::Elliptic;
    long long mult = 1;
    bool operator==(const OrbitFactor& o) const = default;
};

// single copy of an orbit, multiplicities expanded
struct OrbitUnit {
    Vec2 v;
    OrbitType type = OrbitType::Elliptic;
    bool operator==(const OrbitUnit& o) const = default;
};

// slope-descending, elliptic before hyperbolic at equal slope
bool unit_before(const OrbitUnit& a, const OrbitUnit& b);

// Admissible orbit multiset: per primitive vector, any elliptic multiplicity
// plus at most one hyperbolic copy.
struct OrbitSet {
    std::vector<OrbitFactor> factors;

    static OrbitSet of(std::vector<OrbitFactor> fs);  // canonicalize + validate

    Vec2 total() const;
    long long unit_count() const;
    long long elliptic_weight() const;
    long long hyperbolic_count() const;
    std::vector<OrbitUnit> units() const;
    ConvexPath path() const;
    std::string str() const;  // e[3/2] h[1] e[0]^2

    bool operator==(const OrbitSet& o) const { return factors == o.factors; }
    bool operator<(const OrbitSet& o) const;
};

OrbitSet orbit_set_from_units(const std::vector<OrbitUnit>& us);
OrbitSet parse_orbit_set(const std::string& s);

struct Window {
    Bound x1, x2;
};

// all admissible orbit sets with slopes inside the window and the given total
std::vector<OrbitSet> enumerate_generators(const Window& w, long long P, long long Q);

OrbitSet e_generator(const Window& w, long long P, long long Q);
// one elliptic copy traded for the hyperbolic orbit, once per factor
std::vector<OrbitSet> h_variants(const OrbitSet& all_elliptic);

// elliptic-weight difference plus twice the area between the paths
long long relative_index(const OrbitSet& a, const OrbitSet& b);

// the same area term computed two ways: path integrals vs pairwise
// determinants of the expanded factor sequences; throws if they disagree
long long area_determinant_identity(const OrbitSet& a, const OrbitSet& b);

struct RoundingWitness {
    OrbitSet corner;  // two consumed factors of the target
    OrbitSet fill;    // replacement block in the source
    bool operator==(const RoundingWitness& o) const = default;
};

std::vector<RoundingWitness> rounding_witnesses(const OrbitSet& a, const OrbitSet& b);
bool is_rounding(const OrbitSet& a, const OrbitSet& b);
// three hyperbolic corner factors traded for an elliptic block; these pairs
// carry coefficient zero in the differential
bool is_double_rounding(const OrbitSet& a, const OrbitSet& b);

struct CylinderComplex {
    Window w;
    long long P = 0, Q = 0;
    std::vector<OrbitSet> gens;  // sorted
    ChainComplexF2 cx;           // grade[i] = relative_index(gens[i], e_generator)
    std::vector<std::pair<int, int>> audit;  // pairs admitting several distinct witnesses

    int gen_index(const OrbitSet& g) const;  // -1 if absent
};

// differential: coefficient one exactly on rounding pairs; honors PFH_THREADS
CylinderComplex cylinder_complex(const Window& w, long long P, long long Q);

struct HomologyCheck {
    bool ok = false;
    std::map<long long, long long> dims;
    std::string detail;
};

// homology must be one class at grade zero (the maximal path) and one at
// grade one (the sum of its single-hyperbolic variants)
HomologyCheck check_cylinder_homology(const CylinderComplex& c);

// level = minus the multiplicity of the steepest maximal-path slope
std::vector<long long> top_slope_levels(const CylinderComplex& c);
std::vector<PageDims> top_slope_pages(const CylinderComplex& c, int pages);

// complexes over a window and its unimodular image match edge for edge
bool shear_equivariance_check(const Window& w, long long P, long long Q, const Mat2& A);

struct CornerCheck {
    bool ok = false;
    long long windows = 0;
    std::string detail;
};

// For slopes lo < hi spanning a small determinant: in the window widened past
// both, the transpose differential of the two-factor corner classes must
// consist of exactly the inner window's maximal path resp. its hyperbolic
// variants.
CornerCheck corner_pair_check(const Vec2& lo, const Vec2& hi);
CornerCheck corner_pair_sweep(long long max_total_den, long long max_det);

}  // namespace pfh
