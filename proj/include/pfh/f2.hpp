#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pfh/rational.hpp"

namespace pfh {

// dense bit vector over F2
struct BitVec {
    size_t n = 0;
    std::vector<uint64_t> w;

    explicit BitVec(size_t bits = 0) : n(bits), w((bits + 63) / 64, 0) {}

    bool get(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void flip(size_t i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }

    BitVec& operator^=(const BitVec& o);
    bool any() const;
    long long lowest() const;  // index of first set bit, -1 if zero
    long long popcount() const;
    std::vector<int> bits() const;

    bool operator==(const BitVec& o) const { return n == o.n && w == o.w; }
};

// incremental span with forward-substitution reduction
struct F2Span {
    std::vector<std::pair<long long, BitVec>> basis;  // (pivot bit, vector)

    BitVec reduce(BitVec v) const;
    bool add(BitVec v);  // true iff v was independent
    bool contains(const BitVec& v) const { return !reduce(v).any(); }
    long long rank() const { return (long long)basis.size(); }
};

struct KernelBasis {
    long long rank = 0;
    std::vector<BitVec> combos;  // kernel vectors in column-index space
};

KernelBasis rank_and_kernel(const std::vector<BitVec>& cols);

// Finite F2 chain complex. grade steps down by one along d; with mod2 set,
// grades live in Z/2 (parity gradings).
struct ChainComplexF2 {
    bool mod2 = false;
    std::vector<long long> grade;
    std::vector<std::vector<int>> d;  // d[j] = sorted target indices

    size_t size() const { return grade.size(); }
    long long key(size_t i) const { return mod2 ? ((grade[i] % 2) + 2) % 2 : grade[i]; }
    long long key_up(long long g) const { return mod2 ? (g + 1) % 2 : g + 1; }

    void validate() const;  // index bounds, sortedness, grade step
    std::optional<std::pair<int, int>> d_squared_witness() const;
    void assert_d_squared_zero() const;  // throws DifferentialNotSquareZero

    BitVec column(size_t j) const;
    BitVec apply_d(const BitVec& v) const;

    std::map<long long, long long> homology_dims() const;
    std::map<long long, std::vector<BitVec>> homology_reps() const;
};

// dims of the r-th page, keyed by (filtration level, grade), r = 1..pages
using PageDims = std::map<std::pair<long long, long long>, long long>;
std::vector<PageDims> spectral_pages(const ChainComplexF2& cx,
                                     const std::vector<long long>& level,
                                     int pages);

}  // namespace pfh
