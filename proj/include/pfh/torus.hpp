#pragma once

#include <map>
#include <string>
#include <vector>

#include "pfh/cylinder.hpp"
#include "pfh/f2.hpp"

namespace pfh {

struct TorusSector {
    long long n = 1;      // parallel twist count
    long long d = 1;      // degree
    long long sector = 0;  // total numerator mod n
};

// Generator for the n-fold torus twist: exponents of the two orbits e, h on
// the distinguished fiber (h at most once) plus an admissible multiset of
// orbits at slopes strictly between 0 and n.
struct TorusOrbitSet {
    long long e_exp = 0;
    long long h_exp = 0;
    OrbitSet interior;

    static TorusOrbitSet of(long long e, long long h, OrbitSet in, long long n);

    long long degree() const;     // total denominator, fiber letters count one
    long long numerator() const;  // interior numerator total
    long long boundary_exp() const { return e_exp + h_exp; }
    std::string str() const;  // e^2 h e[3/2]

    bool operator==(const TorusOrbitSet& o) const = default;
    bool operator<(const TorusOrbitSet& o) const;
};

// slope-wrapping correction of a lifted orbit set: for each copy of (p, q),
// floor(p/nq) * (-p + (nq/2)(floor(p/nq) + 1)); always an integer
long long wrap_correction(const OrbitSet& lifted, long long n);

// all generators of the given degree whose total numerator is congruent to
// sector mod n, in canonical order
std::vector<TorusOrbitSet> enumerate_torus(long long n, long long d, long long sector);

// cylinder lifts of g: fiber letters go to slope 0 or n; widen = 1 also
// allows 2n and shifts interior copies up one period
std::vector<OrbitSet> lift_configs(const TorusOrbitSet& g, long long n, int widen);

// relative grading: cylinder index minus 2 * degree * wrap-correction
// difference, over lifts with a common total; asserted independent of the
// choice of pair. Widened lifts are consulted only when no direct common
// total exists.
long long sector_grading(const TorusOrbitSet& a, const TorusOrbitSet& b, long long n);

// raw number of local lift configurations that round; the differential
// coefficient is this count mod 2
long long lift_rounding_count(const TorusOrbitSet& a, const TorusOrbitSet& b, long long n);

struct TorusComplex {
    TorusSector s;
    std::vector<TorusOrbitSet> gens;  // sorted; front is the grading base
    ChainComplexF2 cx;

    int gen_index(const TorusOrbitSet& g) const;  // -1 if absent
};

TorusComplex torus_complex(const TorusSector& s);

struct TorusHomologyCheck {
    bool ok = false;
    bool expectation_applied = false;
    std::map<long long, long long> dims;
    std::string detail;
};

// the zero sector must carry exactly one class in each grade 0..2d-1; other
// sectors are reported without an expectation
TorusHomologyCheck torus_homology_check(const TorusComplex& c);

// level = degree minus the fiber-letter exponent
std::vector<long long> eh_exponent_levels(const TorusComplex& c);
std::vector<PageDims> eh_exponent_pages(const TorusComplex& c, int pages);

// reduce a cylinder orbit set mod the period; slope-0 images become fiber letters
TorusOrbitSet project_to_torus(const OrbitSet& a, long long n);

struct WrappingCheck {
    bool ok = false;
    std::string detail;
    std::vector<OrbitSet> lifted_terms;          // wrapped differential of e_0^d upstairs
    std::vector<TorusOrbitSet> projected_terms;  // surviving image downstairs
};

// the wrapped part of the differential of e^d: match its closed corner-sum
// form upstairs, project, then absorb the result into the fiber-letter
// subcomplex (whose top-grade homology must vanish for d >= 2)
WrappingCheck wrapping_check(long long n, long long d);

}  // namespace pfh
