#include "pfh/morse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pfh/rational.hpp"

namespace pfh {

int MorseData::point_id(const std::string& name) const {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i].name == name) return (int)i;
    return -1;
}

MorseData parse_morse(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("morse data: ") + e.what());
    }
    if (!j.is_object() || !j.contains("points"))
        throw Error("morse data: expected an object with a points array");
    MorseData data;
    try {
        for (const auto& p : j.at("points")) {
            MorsePoint pt;
            pt.name = p.at("name").get<std::string>();
            pt.index = p.at("index").get<int>();
            pt.numerator = p.value("numerator", (long long)0);
            pt.component = p.value("component", std::string());
            data.points.push_back(pt);
        }
        for (const auto& b : j.value("boundary", nlohmann::json::array())) {
            if (!b.is_array() || b.size() != 2)
                throw Error("morse data: boundary entries are [from, to] pairs");
            data.boundary.emplace_back(b.at(0).get<std::string>(),
                                       b.at(1).get<std::string>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("morse data: ") + e.what());
    }
    return data;
}

std::string morse_json(const MorseData& data) {
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (const MorsePoint& p : data.points)
        j["points"].push_back({{"name", p.name},
                               {"index", p.index},
                               {"numerator", p.numerator},
                               {"component", p.component}});
    j["boundary"] = nlohmann::json::array();
    for (const auto& [a, b] : data.boundary)
        j["boundary"].push_back({a, b});
    return j.dump(2);
}

std::vector<std::string> validate_morse(const MorseData& data) {
    std::vector<std::string> bad;
    std::set<std::string> seen;
    for (size_t i = 0; i < data.points.size(); ++i) {
        const MorsePoint& p = data.points[i];
        if (p.name.empty())
            bad.push_back("point " + std::to_string(i) + " has an empty name");
        else if (!seen.insert(p.name).second)
            bad.push_back("duplicate point name " + p.name);
        if (p.index < 0 || p.index > 2)
            bad.push_back("point " + p.name + " has index " +
                          std::to_string(p.index));
    }
    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& [a, b] : data.boundary) {
        int ia = data.point_id(a), ib = data.point_id(b);
        if (ia < 0 || ib < 0) {
            bad.push_back("boundary names unknown point " + (ia < 0 ? a : b));
            continue;
        }
        if (!pairs.insert({a, b}).second)
            bad.push_back("repeated boundary pair " + a + " -> " + b);
        if (data.points[ia].index != data.points[ib].index + 1)
            bad.push_back("boundary " + a + " -> " + b +
                          " does not drop the index by one");
        if (data.points[ia].numerator != data.points[ib].numerator)
            bad.push_back("boundary " + a + " -> " + b + " changes the numerator");
    }
    if (!bad.empty()) return bad;

    std::vector<std::vector<int>> d(data.points.size());
    for (const auto& [a, b] : data.boundary)
        d[data.point_id(a)].push_back(data.point_id(b));
    for (size_t i = 0; i < d.size(); ++i) {
        std::map<int, int> parity;
        for (int m : d[i])
            for (int t : d[m]) parity[t] ^= 1;
        for (const auto& [t, odd] : parity)
            if (odd)
                bad.push_back("d squared of " + data.points[i].name + " hits " +
                              data.points[t].name);
    }
    return bad;
}

namespace {

void enumerate_multisets(const MorseData& data, long long d, int from,
                         std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int i = from; i < (int)data.points.size(); ++i) {
        if (data.points[i].hyperbolic() && !cur.empty() && cur.back() == i)
            continue;
        cur.push_back(i);
        enumerate_multisets(data, d - 1, i, cur, out);
        cur.pop_back();
    }
}

}  // namespace

int MorseProduct::gen_index(const std::vector<int>& g) const {
    auto it = std::lower_bound(gens.begin(), gens.end(), g);
    if (it == gens.end() || *it != g) return -1;
    return (int)(it - gens.begin());
}

std::string MorseProduct::gen_str(size_t i) const {
    const std::vector<int>& g = gens[i];
    if (g.empty()) return "1";
    std::ostringstream out;
    for (size_t k = 0; k < g.size();) {
        size_t r = k;
        while (r < g.size() && g[r] == g[k]) ++r;
        if (k) out << ' ';
        out << data.points[g[k]].name;
        if (r - k > 1) out << '^' << (r - k);
        k = r;
    }
    return out.str();
}

MorseProduct product_complex(const MorseData& data, long long d) {
    std::vector<std::string> bad = validate_morse(data);
    if (!bad.empty()) throw Error("morse data: " + bad.front());
    if (d < 0) throw Error("morse product needs degree >= 0");

    MorseProduct up;
    up.data = data;
    std::vector<int> cur;
    enumerate_multisets(data, d, 0, cur, up.gens);
    std::sort(up.gens.begin(), up.gens.end());

    std::vector<std::vector<int>> dmap(data.points.size());
    for (const auto& [a, b] : data.boundary)
        dmap[data.point_id(a)].push_back(data.point_id(b));

    up.cx.mod2 = true;
    up.cx.grade.resize(up.gens.size());
    up.cx.d.resize(up.gens.size());
    for (size_t j = 0; j < up.gens.size(); ++j) {
        const std::vector<int>& g = up.gens[j];
        long long hyp = 0;
        for (int i : g) hyp += data.points[i].hyperbolic() ? 1 : 0;
        up.cx.grade[j] = hyp % 2;

        std::vector<int>& col = up.cx.d[j];
        for (size_t k = 0; k < g.size(); ++k) {
            // one move per point type: the coefficient does not see the
            // multiplicity, only one factor rides the nontrivial cylinder
            if (k > 0 && g[k] == g[k - 1]) continue;
            for (int q : dmap[g[k]]) {
                std::vector<int> to = g;
                to.erase(to.begin() + k);
                to.insert(std::lower_bound(to.begin(), to.end(), q), q);
                if (data.points[q].hyperbolic() &&
                    std::count(to.begin(), to.end(), q) > 1)
                    continue;
                col.push_back(up.gen_index(to));
            }
        }
        std::sort(col.begin(), col.end());
    }
    up.cx.validate();
    up.cx.assert_d_squared_zero();
    return up;
}

}  // namespace pfh
