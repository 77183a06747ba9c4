#include "pfh/report.hpp"

#include <fstream>

#include "json.hpp"
#include "pfh/rational.hpp"

namespace pfh {

const char* const kToolVersion = "0.1.0";

Report make_report(const std::string& problem) {
    Report r;
    r.tool = "pfh";
    r.version = kToolVersion;
    r.problem = problem;
    return r;
}

void attach_complex(Report& r, const ChainComplexF2& cx,
                    const std::vector<std::string>& texts) {
    if (texts.size() != cx.size())
        throw Error("report: generator label count mismatch");
    r.generators.clear();
    r.differential.clear();
    r.betti.clear();
    for (size_t i = 0; i < cx.size(); ++i)
        r.generators.push_back(
            {"g" + std::to_string(i), texts[i], cx.grade[i]});
    for (size_t j = 0; j < cx.size(); ++j)
        for (int t : cx.d[j])
            r.differential.push_back(
                {"g" + std::to_string(j), "g" + std::to_string(t)});
    for (const auto& [g, dim] : cx.homology_dims())
        if (dim) r.betti.push_back({g, dim});
}

void add_check(Report& r, const std::string& name, bool pass,
               const std::string& details) {
    r.checks.push_back({name, pass, details});
}

bool all_checks_pass(const Report& r) {
    for (const ReportCheck& c : r.checks)
        if (!c.pass) return false;
    return true;
}

std::string report_json(const Report& r) {
    nlohmann::json j;
    j["tool"] = r.tool;
    j["version"] = r.version;
    j["problem"] = r.problem;
    j["generators"] = nlohmann::json::array();
    for (const ReportGenerator& g : r.generators)
        j["generators"].push_back(
            {{"id", g.id}, {"text", g.text}, {"grade", g.grade}});
    j["differential"] = nlohmann::json::array();
    for (const auto& [a, b] : r.differential)
        j["differential"].push_back({a, b});
    j["betti"] = nlohmann::json::array();
    for (const BettiEntry& b : r.betti)
        j["betti"].push_back({{"grade", b.grade}, {"dim", b.dim}});
    j["checks"] = nlohmann::json::array();
    for (const ReportCheck& c : r.checks)
        j["checks"].push_back(
            {{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    return j.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        Report r;
        r.tool = j.at("tool").get<std::string>();
        r.version = j.at("version").get<std::string>();
        r.problem = j.at("problem").get<std::string>();
        for (const auto& g : j.at("generators"))
            r.generators.push_back({g.at("id").get<std::string>(),
                                    g.at("text").get<std::string>(),
                                    g.at("grade").get<long long>()});
        for (const auto& e : j.at("differential"))
            r.differential.emplace_back(e.at(0).get<std::string>(),
                                        e.at(1).get<std::string>());
        for (const auto& b : j.at("betti"))
            r.betti.push_back(
                {b.at("grade").get<long long>(), b.at("dim").get<long long>()});
        for (const auto& c : j.at("checks"))
            r.checks.push_back({c.at("name").get<std::string>(),
                                c.at("pass").get<bool>(),
                                c.at("details").get<std::string>()});
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("report: ") + e.what());
    }
}

void write_report(const Report& r, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("report: cannot open " + path);
    out << report_json(r);
    if (!out) throw Error("report: write failed for " + path);
}

}  // namespace pfh
