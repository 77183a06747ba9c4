#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pfh/f2.hpp"

namespace pfh {

// Critical point of a Morse function on a surface piece. Index 1 points
// play the role of hyperbolic orbits, index 0 and 2 of elliptic ones.
struct MorsePoint {
    std::string name;
    int index = 0;
    long long numerator = 0;
    std::string component;

    bool hyperbolic() const { return index == 1; }
    bool operator==(const MorsePoint&) const = default;
};

struct MorseData {
    std::vector<MorsePoint> points;
    // boundary pairs (from, to), each with coefficient one over F2
    std::vector<std::pair<std::string, std::string>> boundary;

    int point_id(const std::string& name) const;  // -1 if unknown
};

MorseData parse_morse(const std::string& text);
std::string morse_json(const MorseData& data);

// empty when the data is a well formed F2 Morse differential
std::vector<std::string> validate_morse(const MorseData& data);

// Degree d symmetric product complex. Generators are multisets of critical
// points with every index 1 point used at most once; the grading is the
// count of index 1 factors mod 2.
struct MorseProduct {
    MorseData data;
    std::vector<std::vector<int>> gens;  // sorted multisets of point ids
    ChainComplexF2 cx;

    int gen_index(const std::vector<int>& g) const;  // -1 if absent
    std::string gen_str(size_t i) const;
};

MorseProduct product_complex(const MorseData& data, long long d);

}  // namespace pfh
