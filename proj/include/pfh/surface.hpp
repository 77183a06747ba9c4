#pragma once

#include <string>
#include <vector>

#include "pfh/cylinder.hpp"
#include "pfh/f2.hpp"
#include "pfh/morse.hpp"

namespace pfh {

// Single positive Dehn twist on a closed surface, along a nonseparating
// circle (genus g) or a circle splitting off pieces of genus g0 and g1.
struct SurfaceConfig {
    bool separating = false;
    long long g = 1;
    long long g0 = 0, g1 = 0;
    long long d = 0;

    static SurfaceConfig nonseparating(long long g, long long d);
    static SurfaceConfig split(long long g0, long long g1, long long d);
    std::string str() const;
};

// Critical points of the model Morse function on the twist complement.
// The boundary points e0,h0,e1,h1 double as the slope 0 and slope 1
// orbits of the twist region.
MorseData nonseparating_morse_data(long long g);
MorseData separating_morse_data(long long g0, long long g1);

// Morse factors away from the boundary plus an orbit set in the twist
// region; slopes run over the closed window [0,1].
struct MixedGenerator {
    std::vector<int> morse;  // sorted ids into the critical point list
    OrbitSet cyl;

    bool operator==(const MixedGenerator& o) const {
        return morse == o.morse && cyl == o.cyl;
    }
    bool operator<(const MixedGenerator& o) const {
        if (morse != o.morse) return morse < o.morse;
        return cyl < o.cyl;
    }
};

struct SurfaceComplex {
    SurfaceConfig config;
    MorseData data;
    long long sector = -1;  // separating only: total numerator, -1 for all
    std::vector<MixedGenerator> gens;
    ChainComplexF2 cx;  // parity graded by the hyperbolic factor count

    int gen_index(const MixedGenerator& g) const;  // -1 if absent
    std::string gen_str(size_t i) const;
    long long numerator(size_t i) const;
};

// Morse moves plus cylinder roundings; sector >= 0 restricts a separating
// complex to one total numerator
SurfaceComplex build_delta0(const SurfaceConfig& config, long long sector = -1);

struct ParitySplit {
    long long total = 0, even = 0, odd = 0;
};

// closed form for the nonseparating twist: an exterior algebra on the
// 2(g-1) kernel saddles tensored with one line per index 0..2d'-1
ParitySplit expected_nonseparating(long long g, long long d);

// degree list of the building block C_{p,q}; the odd degrees enter when
// min(p, q-p) clears 1, and strict_clause keeps the literal "> 1" cutoff
std::vector<long long> separating_degrees(long long p, long long q,
                                          bool strict_clause);
struct SectorExpectation {
    long long total = 0, even = 0, odd = 0;
    long long literal_total = 0;  // under the strict clause
};
SectorExpectation expected_separating_sector(long long g0, long long g1,
                                             long long d, long long p);

// index of a wrapped comparison class against e0^(d-p) e1^p
long long grading_shift(long long k, long long p, long long eta1, long long g0,
                        long long g1, long long d);
// degree shift applied to the sector summand C_{p,q}
long long sector_shift(long long p, long long g0, long long d);

struct SectorOutcome {
    long long p = 0;
    long long dim = 0, even = 0, odd = 0;
    long long want = 0, want_even = 0, want_odd = 0;
    long long literal_want = 0;
    bool ok = false;
};

struct SurfaceReport {
    SurfaceConfig config;
    bool ok = false;
    long long dim = 0, even = 0, odd = 0;
    long long want = 0, want_even = 0, want_odd = 0;
    std::vector<SectorOutcome> sectors;  // separating only
    std::string detail;
};

// homology of build_delta0 against the closed forms, sector by sector in
// the separating case
SurfaceReport verify_surface(const SurfaceConfig& config);

}  // namespace pfh
