#include "pfh/f2.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace pfh {

BitVec& BitVec::operator^=(const BitVec& o) {
    if (n != o.n) throw Error("BitVec size mismatch");
    for (size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
    return *this;
}

bool BitVec::any() const {
    for (uint64_t x : w)
        if (x) return true;
    return false;
}

long long BitVec::lowest() const {
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i]) return (long long)(i * 64 + std::countr_zero(w[i]));
    return -1;
}

long long BitVec::popcount() const {
    long long c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
}

std::vector<int> BitVec::bits() const {
    std::vector<int> out;
    for (size_t i = 0; i < n; ++i)
        if (get(i)) out.push_back((int)i);
    return out;
}

BitVec F2Span::reduce(BitVec v) const {
    for (const auto& [piv, b] : basis)
        if (v.get(piv)) v ^= b;
    return v;
}

bool F2Span::add(BitVec v) {
    v = reduce(v);
    if (!v.any()) return false;
    basis.emplace_back(v.lowest(), std::move(v));
    return true;
}

KernelBasis rank_and_kernel(const std::vector<BitVec>& cols) {
    KernelBasis out;
    std::vector<std::pair<long long, std::pair<BitVec, BitVec>>> basis;
    for (size_t j = 0; j < cols.size(); ++j) {
        BitVec v = cols[j];
        BitVec combo((cols.size()));
        combo.flip(j);
        for (const auto& [piv, vc] : basis)
            if (v.get(piv)) {
                v ^= vc.first;
                combo ^= vc.second;
            }
        if (v.any()) {
            ++out.rank;
            long long piv = v.lowest();
            basis.push_back({piv, {std::move(v), std::move(combo)}});
        } else {
            out.combos.push_back(std::move(combo));
        }
    }
    return out;
}

void ChainComplexF2::validate() const {
    if (d.size() != grade.size()) throw Error("complex: d size mismatch");
    for (size_t j = 0; j < d.size(); ++j) {
        if (!std::is_sorted(d[j].begin(), d[j].end())) throw Error("complex: unsorted column");
        for (int i : d[j]) {
            if (i < 0 || (size_t)i >= size()) throw Error("complex: target out of range");
            if (key(i) != (mod2 ? key_up(key(j)) : key(j) - 1))
                throw Error("complex: differential does not drop the grading by one");
        }
    }
}

std::optional<std::pair<int, int>> ChainComplexF2::d_squared_witness() const {
    for (size_t j = 0; j < size(); ++j) {
        if (d[j].empty()) continue;
        BitVec acc(size());
        for (int i : d[j]) acc ^= column(i);
        if (acc.any()) return std::make_pair((int)j, (int)acc.lowest());
    }
    return std::nullopt;
}

void ChainComplexF2::assert_d_squared_zero() const {
    if (auto w = d_squared_witness())
        throw DifferentialNotSquareZero("<d^2 g" + std::to_string(w->first) + ", g" +
                                        std::to_string(w->second) + "> = 1");
}

BitVec ChainComplexF2::column(size_t j) const {
    BitVec v(size());
    for (int i : d[j]) v.flip(i);
    return v;
}

BitVec ChainComplexF2::apply_d(const BitVec& v) const {
    BitVec out(size());
    for (size_t j = 0; j < size(); ++j)
        if (v.get(j))
            for (int i : d[j]) out.flip(i);
    return out;
}

std::map<long long, long long> ChainComplexF2::homology_dims() const {
    validate();
    assert_d_squared_zero();
    std::map<long long, long long> count;
    std::map<long long, F2Span> span;
    for (size_t j = 0; j < size(); ++j) {
        ++count[key(j)];
        span[key(j)].add(column(j));
    }
    std::map<long long, long long> out;
    for (const auto& [g, c] : count) {
        long long rank_out = span.count(g) ? span.at(g).rank() : 0;
        long long rank_in = span.count(key_up(g)) ? span.at(key_up(g)).rank() : 0;
        long long h = c - rank_out - rank_in;
        if (h != 0) out[g] = h;
    }
    return out;
}

std::map<long long, std::vector<BitVec>> ChainComplexF2::homology_reps() const {
    validate();
    assert_d_squared_zero();
    std::map<long long, std::vector<size_t>> gens;
    for (size_t j = 0; j < size(); ++j) gens[key(j)].push_back(j);
    std::map<long long, std::vector<BitVec>> out;
    for (const auto& [g, idx] : gens) {
        std::vector<BitVec> cols;
        for (size_t j : idx) cols.push_back(column(j));
        KernelBasis ker = rank_and_kernel(cols);
        F2Span image;
        if (gens.count(key_up(g)))
            for (size_t j : gens.at(key_up(g))) image.add(column(j));
        for (const BitVec& combo : ker.combos) {
            BitVec cycle(size());
            for (size_t t = 0; t < idx.size(); ++t)
                if (combo.get(t)) cycle.flip(idx[t]);
            if (image.add(cycle)) out[g].push_back(cycle);
        }
    }
    return out;
}

namespace {

// basis of { v in F_p, grade g : d v in F_{p-r} }
std::vector<BitVec> z_basis(const ChainComplexF2& cx, const std::vector<long long>& level,
                            long long r, long long p, long long g) {
    std::vector<size_t> sel;
    for (size_t j = 0; j < cx.size(); ++j)
        if (cx.key(j) == g && level[j] <= p) sel.push_back(j);
    std::vector<BitVec> cols;
    for (size_t j : sel) {
        BitVec col(cx.size());
        for (int i : cx.d[j])
            if (level[i] > p - r) col.flip(i);
        cols.push_back(std::move(col));
    }
    KernelBasis ker = rank_and_kernel(cols);
    std::vector<BitVec> out;
    for (const BitVec& combo : ker.combos) {
        BitVec z(cx.size());
        for (size_t t = 0; t < sel.size(); ++t)
            if (combo.get(t)) z.flip(sel[t]);
        out.push_back(std::move(z));
    }
    return out;
}

}  // namespace

std::vector<PageDims> spectral_pages(const ChainComplexF2& cx,
                                     const std::vector<long long>& level,
                                     int pages) {
    cx.validate();
    cx.assert_d_squared_zero();
    if (level.size() != cx.size()) throw Error("spectral_pages: level size mismatch");
    for (size_t j = 0; j < cx.size(); ++j)
        for (int i : cx.d[j])
            if (level[i] > level[j])
                throw FiltrationViolated("edge g" + std::to_string(j) + " -> g" + std::to_string(i));

    std::vector<PageDims> out;
    if (cx.size() == 0) {
        out.resize(pages);
        return out;
    }
    long long lo = *std::min_element(level.begin(), level.end());
    long long hi = *std::max_element(level.begin(), level.end());
    std::vector<long long> grades;
    for (size_t j = 0; j < cx.size(); ++j) grades.push_back(cx.key(j));
    std::sort(grades.begin(), grades.end());
    grades.erase(std::unique(grades.begin(), grades.end()), grades.end());

    for (long long r = 1; r <= pages; ++r) {
        PageDims dims;
        for (long long p = lo; p <= hi; ++p) {
            for (long long g : grades) {
                auto Z = z_basis(cx, level, r, p, g);
                if (Z.empty()) continue;
                F2Span denom;
                for (const BitVec& z : z_basis(cx, level, r - 1, p - 1, g)) denom.add(z);
                for (const BitVec& z : z_basis(cx, level, r - 1, p + r - 1, cx.key_up(g)))
                    denom.add(cx.apply_d(z));
                long long dim = (long long)Z.size() - denom.rank();
                if (dim > 0) dims[{p, g}] = dim;
            }
        }
        out.push_back(std::move(dims));
    }
    return out;
}

}  // namespace pfh
